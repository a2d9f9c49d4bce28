#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "lindex/dynamics.hpp"

namespace lindex {

namespace {

double discriminant_at(double e, double eps) { return cubic_invariants(e, eps).discriminant; }

// Written so that lo = -hi gives an axis that is exactly mirror symmetric.
std::vector<double> axis(GridRange r, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  const double span = static_cast<double>(n - 1);
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        (r.lo * static_cast<double>(n - 1 - i) + r.hi * static_cast<double>(i)) / span;
  }
  return out;
}

bool changes_sign(double a, double b, double c, double d) {
  const double lo = std::min({a, b, c, d});
  const double hi = std::max({a, b, c, d});
  return lo <= 0.0 && hi >= 0.0;
}

// Newton on (X, Y) = 0 in (E, eps); X and Y are quadratic, the Jacobian
// [[6E, 6eps], [-18E, 9eps]] is regular away from the axes.
bool newton_cusp(double& e, double& eps) {
  for (int it = 0; it < 60; ++it) {
    const CubicInvariants f = cubic_invariants(e, eps);
    const double j11 = 6.0 * e, j12 = 6.0 * eps;
    const double j21 = -18.0 * e, j22 = 9.0 * eps;
    const double det = j11 * j22 - j12 * j21;
    if (det == 0.0 || !std::isfinite(det)) return false;
    const double de = (f.x * j22 - f.y * j12) / det;
    const double deps = (j11 * f.y - j21 * f.x) / det;
    e -= de;
    eps -= deps;
    if (std::abs(de) + std::abs(deps) < 1e-15 * (1.0 + std::abs(e) + std::abs(eps))) break;
  }
  const CubicInvariants f = cubic_invariants(e, eps);
  return std::isfinite(e) && std::isfinite(eps) && std::max(std::abs(f.x), std::abs(f.y)) < 1e-12;
}

}  // namespace

Ep2Point bisect_ep2(double e0, double eps0, double e1, double eps1, double step_tol) {
  const bool neg0 = discriminant_at(e0, eps0) <= 0.0;
  double lo = 0.0, hi = 1.0;
  const double length = std::hypot(e1 - e0, eps1 - eps0);
  while ((hi - lo) * length > step_tol) {
    const double mid = 0.5 * (lo + hi);
    const bool neg = discriminant_at(e0 + mid * (e1 - e0), eps0 + mid * (eps1 - eps0)) <= 0.0;
    (neg == neg0 ? lo : hi) = mid;
  }
  const double s = 0.5 * (lo + hi);
  return {e0 + s * (e1 - e0), eps0 + s * (eps1 - eps0)};
}

EpMap ep_map(GridRange e_range, GridRange eps_range, int n_e, int n_eps, double tol_ep) {
  if (n_e < 2 || n_eps < 2) throw std::invalid_argument("ep_map: need at least 2 points per axis");
  EpMap map;
  map.e_axis = axis(e_range, n_e);
  map.eps_axis = axis(eps_range, n_eps);
  const auto ne = map.e_axis.size();
  const auto neps = map.eps_axis.size();

  // Cells are independent; evaluated in grid order so the output is fixed.
  map.discriminant.resize(ne * neps);
  map.flags.resize(ne * neps);
  for (std::size_t i = 0; i < ne; ++i) {
    for (std::size_t j = 0; j < neps; ++j) {
      const SpectrumResult s = cubic_eigenvalues(map.e_axis[i], map.eps_axis[j], tol_ep);
      map.discriminant[i * neps + j] = s.discriminant;
      map.flags[i * neps + j] = s.ep;
    }
  }

  auto sign_change = [&](std::size_t a, std::size_t b) {
    return (map.discriminant[a] <= 0.0) != (map.discriminant[b] <= 0.0);
  };
  for (std::size_t i = 0; i < ne; ++i) {
    for (std::size_t j = 0; j < neps; ++j) {
      const std::size_t here = i * neps + j;
      if (i + 1 < ne && sign_change(here, here + neps)) {
        map.ep2.push_back(bisect_ep2(map.e_axis[i], map.eps_axis[j], map.e_axis[i + 1], map.eps_axis[j]));
      }
      if (j + 1 < neps && sign_change(here, here + 1)) {
        map.ep2.push_back(bisect_ep2(map.e_axis[i], map.eps_axis[j], map.e_axis[i], map.eps_axis[j + 1]));
      }
    }
  }

  const double de = (map.e_axis.back() - map.e_axis.front()) / static_cast<double>(ne - 1);
  const double deps = (map.eps_axis.back() - map.eps_axis.front()) / static_cast<double>(neps - 1);
  for (std::size_t i = 0; i + 1 < ne; ++i) {
    for (std::size_t j = 0; j + 1 < neps; ++j) {
      const double e0 = map.e_axis[i], e1 = map.e_axis[i + 1];
      const double p0 = map.eps_axis[j], p1 = map.eps_axis[j + 1];
      const CubicInvariants c00 = cubic_invariants(e0, p0), c01 = cubic_invariants(e0, p1);
      const CubicInvariants c10 = cubic_invariants(e1, p0), c11 = cubic_invariants(e1, p1);
      if (!changes_sign(c00.x, c01.x, c10.x, c11.x) || !changes_sign(c00.y, c01.y, c10.y, c11.y)) {
        continue;
      }
      double e = 0.5 * (e0 + e1), eps = 0.5 * (p0 + p1);
      if (!newton_cusp(e, eps)) continue;
      // Accept roots within one cell of the seed cell; drop duplicates.
      const bool near = e >= std::min(e0, e1) - std::abs(de) && e <= std::max(e0, e1) + std::abs(de) &&
                        eps >= std::min(p0, p1) - std::abs(deps) && eps <= std::max(p0, p1) + std::abs(deps);
      if (!near) continue;
      bool duplicate = false;
      for (const Ep3Point& c : map.cusps) {
        if (std::abs(c.e_over_gamma - e) < 1e-9 && std::abs(c.eps_over_gamma - eps) < 1e-9) duplicate = true;
      }
      if (duplicate) continue;
      const CubicInvariants f = cubic_invariants(e, eps);
      map.cusps.push_back({e, eps, std::max(std::abs(f.x), std::abs(f.y))});
    }
  }
  return map;
}

void write_epmap_csv(std::ostream& os, const EpMap& map) {
  os << "e_over_gamma,eps_over_gamma,discriminant,region\n";
  for (std::size_t i = 0; i < map.e_axis.size(); ++i) {
    for (std::size_t j = 0; j < map.eps_axis.size(); ++j) {
      const double d = map.at(i, j);
      fmt::print(os, "{:.17g},{:.17g},{:.17g},{}\n", map.e_axis[i], map.eps_axis[j], d,
                 d <= 0.0 ? "real" : "complex");
    }
  }
}

void write_cusps_csv(std::ostream& os, const EpMap& map) {
  os << "e_over_gamma,eps_over_gamma,residual\n";
  for (const Ep3Point& c : map.cusps) {
    fmt::print(os, "{:.17g},{:.17g},{:.17g}\n", c.e_over_gamma, c.eps_over_gamma, c.residual);
  }
}

void write_ep2_csv(std::ostream& os, const EpMap& map) {
  os << "e_over_gamma,eps_over_gamma\n";
  for (const Ep2Point& p : map.ep2) {
    fmt::print(os, "{:.17g},{:.17g}\n", p.e_over_gamma, p.eps_over_gamma);
  }
}

}  // namespace lindex
