#include <algorithm>
#include <cmath>

#include "lindex/dynamics.hpp"

namespace lindex {

std::string_view to_string(EpKind kind) {
  switch (kind) {
    case EpKind::None: return "None";
    case EpKind::EP2: return "EP2";
    case EpKind::EP3: return "EP3";
  }
  return "Unknown";
}

CubicInvariants cubic_invariants(double e, double eps) {
  const double e2 = e * e;
  const double eps2 = eps * eps;
  const double x = -0.25 + 3.0 * eps2 + 3.0 * e2;
  const double y = -0.25 + 4.5 * eps2 - 9.0 * e2;
  return {x, y, y * y + 4.0 * x * x * x};
}

Eigen::Matrix3d characteristic_matrix(double e, double eps) {
  Eigen::Matrix3d m;
  m << -1.0, 0.0, -eps,
       0.0, -0.5, e,
       eps, -e, -0.5;
  return m;
}

SpectrumResult cubic_eigenvalues(double e, double eps, double tol_ep) {
  const CubicInvariants inv = cubic_invariants(e, eps);
  SpectrumResult out;
  out.x = inv.x;
  out.y = inv.y;
  out.discriminant = inv.discriminant;

  // Roots are -2/3 + t with t = u - X / (9 u), u^3 = (Y + Z) / 54.
  const cplx root_d = std::sqrt(cplx(inv.discriminant, 0.0));
  const cplx y_plus = inv.y + root_d;
  const cplx y_minus = inv.y - root_d;
  const bool plus = std::abs(y_plus) >= std::abs(y_minus);
  out.z = plus ? root_d : -root_d;
  const cplx w = plus ? y_plus : y_minus;

  const double cbrt2 = std::cbrt(2.0);
  if (std::abs(w) == 0.0) {
    out.eigenvalues = {cplx(-2.0 / 3.0), cplx(-2.0 / 3.0), cplx(-2.0 / 3.0)};
  } else {
    const cplx c = std::pow(w, 1.0 / 3.0);
    const cplx omega(-0.5, std::sqrt(3.0) / 2.0);
    cplx ck = c;
    for (int k = 0; k < 3; ++k) {
      out.eigenvalues[static_cast<std::size_t>(k)] =
          -2.0 / 3.0 + ck / (3.0 * cbrt2) - cbrt2 * inv.x / (3.0 * ck);
      ck *= omega;
    }
  }

  auto& ev = out.eigenvalues;
  if (inv.discriminant < 0.0) {
    for (auto& v : ev) v = cplx(v.real(), 0.0);
    std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) { return a.real() > b.real(); });
  } else {
    std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) { return std::abs(a.imag()) < std::abs(b.imag()); });
    ev[0] = cplx(ev[0].real(), 0.0);
    if (ev[1].imag() < ev[2].imag()) std::swap(ev[1], ev[2]);
  }
  out.ep = classify_ep(out, tol_ep);
  return out;
}

EpKind classify_ep(const SpectrumResult& s, double tol_ep) {
  if (std::abs(s.x) < tol_ep && std::abs(s.y) < tol_ep) return EpKind::EP3;
  if (std::abs(s.discriminant) < tol_ep) return EpKind::EP2;
  return EpKind::None;
}

}  // namespace lindex
