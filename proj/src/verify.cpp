#include "lindex/verify.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "lindex/decompose.hpp"
#include "lindex/sampling.hpp"

namespace lindex {

namespace {

struct Check {
  const char* name;
  double tolerance;
};

constexpr std::array<Check, 6> kChecks{{
    {"transform_energy_shift", 1e-12},
    {"transform_rescale", 1e-12},
    {"transform_identity_shift", 1e-12},
    {"transform_unitary_mix", 1e-12},
    {"decompose_roundtrip", 1e-10},
    {"fermionic_algebra", 1e-12},
}};

double fermionic_deviation(const FermionicPair& p, const HermitianAxis& a3) {
  const Operator2 id = Operator2::identity();
  return std::max({(p.sp * p.sp).max_abs(), max_abs_diff(anticommutator(p.sp, p.sm), id),
                   max_abs_diff(commutator(p.sp, p.sm), a3.to_full().op())});
}

}  // namespace

VerifyReport run_verification(std::uint64_t seed, int count) {
  if (count < 1) throw std::invalid_argument("verify: count must be >= 1");
  Rng rng(seed);
  VerifyReport report;
  for (const Check& c : kChecks) report.checks.push_back({c.name, c.tolerance, 0.0, 0, 0});

  auto record = [&](std::size_t k, double dev) {
    CheckSummary& s = report.checks[k];
    s.worst = std::max(s.worst, dev);
    ++s.total;
    if (dev < s.tolerance) ++s.passed;
  };

  for (int i = 0; i < count; ++i) {
    const GklsSystem sys = random_exchange_system(rng);
    const Liouvillian4 ref = liouvillian_matrix(sys);

    const double e0 = uniform(rng, -5.0, 5.0);
    record(0, max_abs_diff(liouvillian_matrix(transform_energy_shift(sys, e0)), ref));

    const auto index = static_cast<std::size_t>(uniform(rng, 0.0, 2.0)) % 2;
    cplx alpha = complex_normal(rng);
    if (std::abs(alpha) < 0.1) alpha += 0.5;
    record(1, max_abs_diff(liouvillian_matrix(transform_rescale(sys, index, alpha)), ref));

    const std::array<cplx, 2> shifts{complex_normal(rng), complex_normal(rng)};
    record(2, max_abs_diff(liouvillian_matrix(transform_identity_shift(sys, shifts)), ref));

    const Eigen::MatrixXcd u = random_unitary(rng, 2);
    record(3, max_abs_diff(liouvillian_matrix(transform_unitary_mix(sys, u)), ref));

    try {
      const Decomposition dec = decompose_detailed(sys);
      record(4, max_abs_diff(reassemble(dec.form), ref));
      record(5, fermionic_deviation(dec.pair, dec.diagonal.basis.a3));
    } catch (const std::exception&) {
      record(4, 1e300);
      record(5, 1e300);
    }
  }

  for (const CheckSummary& s : report.checks) {
    report.passed += s.passed;
    report.total += s.total;
  }
  return report;
}

}  // namespace lindex
