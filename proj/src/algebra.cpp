#include "lindex/algebra.hpp"

#include <cmath>
#include <string>

#include "lindex/errors.hpp"

namespace lindex {

namespace {

double expected_norm(AxisNorm convention) { return convention == AxisNorm::Full ? 1.0 : 0.5; }

}  // namespace

Operator2 Operator2::from_pauli(const PauliCoeffs& c) {
  return Operator2(c.c0 + c.cz, c.cx - kI * c.cy, c.cx + kI * c.cy, c.c0 - c.cz);
}

Operator2 Operator2::from_pauli_vector(const Eigen::Vector3cd& v) {
  return from_pauli(PauliCoeffs{0.0, v(0), v(1), v(2)});
}

Operator2 Operator2::from_pauli_vector(const Eigen::Vector3d& v) {
  return from_pauli_vector(Eigen::Vector3cd(v.cast<cplx>()));
}

Operator2 Operator2::traceless_part() const {
  Operator2 out = *this;
  const cplx half_trace = 0.5 * trace();
  out.m_(0, 0) -= half_trace;
  out.m_(1, 1) -= half_trace;
  return out;
}

bool Operator2::is_hermitian(double tol) const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double max_abs_diff(const Operator2& a, const Operator2& b) {
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

PauliCoeffs pauli_decompose(const Operator2& m) {
  const auto& a = m.matrix();
  PauliCoeffs c;
  c.c0 = 0.5 * (a(0, 0) + a(1, 1));
  c.cz = 0.5 * (a(0, 0) - a(1, 1));
  c.cx = 0.5 * (a(0, 1) + a(1, 0));
  c.cy = 0.5 * kI * (a(0, 1) - a(1, 0));
  return c;
}

Eigen::Vector3d hermitian_vector(const Operator2& m) { return pauli_decompose(m).vector().real(); }

cplx hs_inner(const Operator2& x, const Operator2& y) {
  return 0.5 * (x.matrix().adjoint() * y.matrix()).trace();
}

Operator2 commutator(const Operator2& x, const Operator2& y) { return x * y - y * x; }

Operator2 anticommutator(const Operator2& x, const Operator2& y) { return x * y + y * x; }

HermitianAxis::HermitianAxis(const Eigen::Vector3d& v, AxisNorm convention, const Tolerances& tol)
    : v_(v), convention_(convention) {
  const double want = expected_norm(convention);
  if (!std::isfinite(v.norm()) || std::abs(v.norm() - want) > tol.norm) {
    throw Error(ErrorCode::InvalidBasis,
                "axis norm " + std::to_string(v.norm()) + " does not match convention");
  }
}

HermitianAxis HermitianAxis::normalized(const Eigen::Vector3d& direction, AxisNorm convention) {
  const double n = direction.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::InvalidBasis, "cannot normalize a zero axis");
  }
  return HermitianAxis(direction * (expected_norm(convention) / n), convention, 0);
}

HermitianAxis HermitianAxis::from_operator(const Operator2& op, AxisNorm convention,
                                           const Tolerances& tol) {
  const PauliCoeffs c = pauli_decompose(op);
  if (std::abs(c.c0) > tol.herm || !op.is_hermitian(tol.herm)) {
    throw Error(ErrorCode::InvalidBasis, "axis operator must be traceless Hermitian");
  }
  return HermitianAxis(c.vector().real(), convention, tol);
}

HermitianAxis HermitianAxis::to_full() const {
  return convention_ == AxisNorm::Full ? *this : HermitianAxis(2.0 * v_, AxisNorm::Full, 0);
}

HermitianAxis HermitianAxis::to_half() const {
  return convention_ == AxisNorm::Half ? *this : HermitianAxis(0.5 * v_, AxisNorm::Half, 0);
}

HermitianAxis HermitianAxis::negated() const { return HermitianAxis(-v_, convention_, 0); }

std::pair<HermitianAxis, HermitianAxis> orthonormal_pair(const Operator2& b1, const Operator2& b2,
                                                         const Tolerances& tol) {
  for (const Operator2* b : {&b1, &b2}) {
    if (!b->is_hermitian(tol.herm) || std::abs(b->trace()) > tol.herm) {
      throw Error(ErrorCode::InvalidBasis, "orthonormal_pair needs traceless Hermitian inputs");
    }
  }
  const Eigen::Vector3d v1 = hermitian_vector(b1);
  const Eigen::Vector3d v2 = hermitian_vector(b2);
  const double scale = v1.norm() * v2.norm();
  if (!(scale > 0.0) || v1.cross(v2).norm() < tol.collinear * scale) {
    throw Error(ErrorCode::CollinearInput, "inputs span fewer than two dimensions");
  }
  const Eigen::Vector3d e1 = v1 / v1.norm();
  const Eigen::Vector3d w = v2 - e1 * e1.dot(v2);
  return {HermitianAxis::normalized(e1, AxisNorm::Full),
          HermitianAxis::normalized(w, AxisNorm::Full)};
}

HermitianAxis complete_basis(const HermitianAxis& a1, const HermitianAxis& a2,
                             const Tolerances& tol) {
  if (a1.convention() != AxisNorm::Full || a2.convention() != AxisNorm::Full) {
    throw Error(ErrorCode::InvalidBasis, "complete_basis expects full-normalized axes");
  }
  if (std::abs(a1.vector().dot(a2.vector())) > tol.norm) {
    throw Error(ErrorCode::InvalidBasis, "complete_basis expects orthogonal axes");
  }
  const Operator2 a3 = commutator(a1.op(), a2.op()) / (2.0 * kI);
  return HermitianAxis(hermitian_vector(a3), AxisNorm::Full, tol);
}

}  // namespace lindex
