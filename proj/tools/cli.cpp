#include "cli.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "lindex/decompose.hpp"
#include "lindex/dynamics.hpp"
#include "lindex/errors.hpp"
#include "lindex/io.hpp"
#include "lindex/thermo.hpp"
#include "lindex/verify.hpp"

namespace lindex::cli {

namespace {

using nlohmann::json;

// Thrown for bad flags, unreadable files and the like.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Tolerances tolerances_from_env() {
  const char* raw = std::getenv("LA_TOL");
  if (raw == nullptr || *raw == '\0') return {};
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw UsageError(std::string("LA_TOL must be a positive number, got '") + raw + "'");
  }
  return Tolerances::uniform(v);
}

// Writes to `path`, or to `fallback` when path is empty or "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot write " + path);
      stream_ = file_.get();
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json vector_json(const Eigen::Vector3d& v) { return json::array({v(0), v(1), v(2)}); }

struct DecomposeOpts {
  std::string system, out;
};
struct EvolveOpts {
  std::string system, out;
  double t = 10.0;
  int steps = 1000;
  std::vector<double> r0{0.0, 0.0, 0.0};
};
struct SteadyOpts {
  std::string system, out;
  bool gibbs = false;
};
struct SpectrumOpts {
  double e = 0.0, eps = 0.0, tol_ep = 1e-8;
};
struct EpmapOpts {
  double e_min = -0.3, e_max = 0.3, eps_min = -0.5, eps_max = 0.5;
  int n = 201;
  int n_eps = 0;
  std::string out = "epmap.csv", cusps = "cusps.csv", ep2_out;
  double tol_ep = 1e-8;
};
struct VerifyOpts {
  std::uint64_t seed = 42;
  int count = 100;
};

int cmd_decompose(const DecomposeOpts& o, const Tolerances& tol, std::ostream& out,
                  std::ostream& err) {
  const GklsSystem sys = load_system(o.system, tol);
  const Classification kind = classify_input(sys, tol);
  if (kind != Classification::ExchangeCandidate) {
    err << to_string(kind) << "\n";
    return kExitDomain;
  }
  const PhysicalForm pf = decompose(sys, RatePolicy::Report, tol);
  const double residual = max_abs_diff(reassemble(pf), liouvillian_matrix(sys));
  if (!pf.rates_nonnegative()) {
    fmt::print(err, "warning: negative exchange rate (gamma_p={}, gamma_m={})\n", pf.gamma_p,
               pf.gamma_m);
  }
  Sink sink(o.out, out);
  sink.get() << physical_form_to_json(pf, residual).dump() << "\n";
  if (!(residual < 1e-8)) {
    fmt::print(err, "round-trip residual {} exceeds 1e-8\n", residual);
    return kExitDomain;
  }
  return kExitOk;
}

int cmd_evolve(const EvolveOpts& o, const Tolerances& tol, std::ostream& out) {
  if (o.r0.size() != 3) throw UsageError("--r0 needs exactly three values");
  if (o.steps < 1 || !(o.t > 0.0)) throw UsageError("need --steps >= 1 and --t > 0");
  const GklsSystem sys = load_system(o.system, tol);
  const AffineBlochGenerator gen = bloch_generator(sys, pauli_basis(), tol);
  const Eigen::Vector3d r0(o.r0[0], o.r0[1], o.r0[2]);
  Sink sink(o.out, out);
  write_trajectory_csv(sink.get(), evolve(gen, r0, o.t, o.steps));
  return kExitOk;
}

int cmd_steady(const SteadyOpts& o, const Tolerances& tol, std::ostream& out) {
  const GklsSystem sys = load_system(o.system, tol);
  const Eigen::Vector3d r = stationary_state(bloch_generator(sys, pauli_basis(), tol));
  json result{{"r", vector_json(r)}};

  if (classify_input(sys, tol) == Classification::ExchangeCandidate) {
    const Decomposition dec = decompose_detailed(sys, RatePolicy::Report, tol);
    // (N, D, i[N, D]) ordering of the case studies: a3, a1', -a2'.
    const ExchangeBasis& b = dec.diagonal.basis;
    const Eigen::Vector3d r_x(b.a3.to_full().vector().dot(r), b.a1.to_full().vector().dot(r),
                              0.0 - b.a2.to_full().vector().dot(r));
    result["r_exchange"] = vector_json(r_x);
    if (o.gibbs) {
      const Operator2 rho = 0.5 * (Operator2::identity() + Operator2::from_pauli_vector(r));
      const GibbsFit fit = gibbs_fit(rho, dec.form.h_eff, dec.form.n.op());
      result["beta"] = fit.beta;
      result["mu"] = fit.mu;
      result["lambda"] = fit.lam;
      result["log_z"] = fit.log_z;
      result["residual"] = fit.residual;
    }
  } else if (o.gibbs) {
    throw Error(ErrorCode::NotExchangeCandidate,
                std::string(to_string(classify_input(sys, tol))) + " (gibbs fit needs N)");
  }
  Sink sink(o.out, out);
  sink.get() << result.dump() << "\n";
  return kExitOk;
}

int cmd_spectrum(const SpectrumOpts& o, std::ostream& out) {
  if (!(o.tol_ep > 0.0)) throw UsageError("--tol-ep must be > 0");
  const SpectrumResult s = cubic_eigenvalues(o.e, o.eps, o.tol_ep);
  json ev = json::array();
  for (cplx l : s.eigenvalues) ev.push_back(complex_json(l));
  const json result{{"e_over_gamma", o.e}, {"eps_over_gamma", o.eps},
                    {"eigenvalues", ev},    {"ep", std::string(to_string(s.ep))},
                    {"discriminant", s.discriminant},
                    {"region", s.discriminant <= 0.0 ? "real" : "complex"},
                    {"x", s.x}, {"y", s.y}, {"z", complex_json(s.z)}};
  out << result.dump() << "\n";
  return kExitOk;
}

int cmd_epmap(const EpmapOpts& o, std::ostream& out) {
  const int n_eps = o.n_eps > 0 ? o.n_eps : o.n;
  if (o.n < 2 || n_eps < 2) throw UsageError("grid needs at least 2 points per axis");
  if (!(o.tol_ep > 0.0)) throw UsageError("--tol-ep must be > 0");
  const EpMap map = ep_map({o.e_min, o.e_max}, {o.eps_min, o.eps_max}, o.n, n_eps, o.tol_ep);
  {
    Sink sink(o.out, out);
    write_epmap_csv(sink.get(), map);
  }
  {
    Sink sink(o.cusps, out);
    write_cusps_csv(sink.get(), map);
  }
  if (!o.ep2_out.empty()) {
    Sink sink(o.ep2_out, out);
    write_ep2_csv(sink.get(), map);
  }
  return kExitOk;
}

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
  if (o.count < 1) throw UsageError("--count must be >= 1");
  const VerifyReport report = run_verification(o.seed, o.count);
  for (const CheckSummary& c : report.checks) {
    fmt::print(out, "{:<26} worst={:.3e} tol={:.0e} {}/{}\n", c.name, c.worst, c.tolerance,
               c.passed, c.total);
  }
  fmt::print(out, "{}/{}\n", report.passed, report.total);
  return report.ok() ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-level GKLS decomposition and analysis"};
  app.require_subcommand(1);

  DecomposeOpts dec;
  auto* s_dec = app.add_subcommand("decompose", "Decompose a system into its physical form");
  s_dec->add_option("--system", dec.system, "System JSON")->required();
  s_dec->add_option("--out", dec.out, "Output file (default stdout)");

  EvolveOpts ev;
  auto* s_ev = app.add_subcommand("evolve", "Propagate the Bloch vector (Pauli basis)");
  s_ev->add_option("--system", ev.system, "System JSON")->required();
  s_ev->add_option("--t", ev.t, "Final time");
  s_ev->add_option("--steps", ev.steps, "Number of steps");
  s_ev->add_option("--r0", ev.r0, "Initial Bloch vector")->expected(3);
  s_ev->add_option("--out", ev.out, "Output CSV (default stdout)");

  SteadyOpts st;
  auto* s_st = app.add_subcommand("steady", "Stationary state");
  s_st->add_option("--system", st.system, "System JSON")->required();
  s_st->add_flag("--gibbs-fit", st.gibbs, "Fit the generalized Gibbs exponents");
  s_st->add_option("--out", st.out, "Output file (default stdout)");

  SpectrumOpts sp;
  auto* s_sp = app.add_subcommand("spectrum", "Closed-form case-3 spectrum (gamma = 1 units)");
  s_sp->add_option("--e", sp.e, "E / gamma")->required();
  s_sp->add_option("--eps", sp.eps, "eps / gamma")->required();
  s_sp->add_option("--tol-ep", sp.tol_ep, "Exceptional-point tolerance");

  EpmapOpts em;
  auto* s_em = app.add_subcommand("epmap", "Discriminant map and exceptional points");
  s_em->add_option("--e-min", em.e_min);
  s_em->add_option("--e-max", em.e_max);
  s_em->add_option("--eps-min", em.eps_min);
  s_em->add_option("--eps-max", em.eps_max);
  s_em->add_option("--n", em.n, "Grid points per axis");
  s_em->add_option("--n-eps", em.n_eps, "Grid points along eps (default --n)");
  s_em->add_option("--out", em.out, "Map CSV ('-' for stdout)");
  s_em->add_option("--cusps", em.cusps, "EP3 CSV");
  s_em->add_option("--ep2-out", em.ep2_out, "EP2 boundary CSV");
  s_em->add_option("--tol-ep", em.tol_ep, "Exceptional-point tolerance");

  VerifyOpts vf;
  auto* s_vf = app.add_subcommand("verify", "Seeded property checks");
  s_vf->add_option("--seed", vf.seed);
  s_vf->add_option("--count", vf.count);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Tolerances tol = tolerances_from_env();
    if (s_dec->parsed()) return cmd_decompose(dec, tol, out, err);
    if (s_ev->parsed()) return cmd_evolve(ev, tol, out);
    if (s_st->parsed()) return cmd_steady(st, tol, out);
    if (s_sp->parsed()) return cmd_spectrum(sp, out);
    if (s_em->parsed()) return cmd_epmap(em, out);
    if (s_vf->parsed()) return cmd_verify(vf, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool input_problem = e.code() == ErrorCode::Parse || e.code() == ErrorCode::InvalidSystem;
    return input_problem ? kExitUsage : kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace lindex::cli
