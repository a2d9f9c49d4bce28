#pragma once

// Exact algebra of 2x2 complex operators: Pauli expansion, Hilbert-Schmidt
// geometry, commutators and the traceless-Hermitian axis type used to build
// orthonormal operator bases.

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "lindex/tolerances.hpp"

namespace lindex {

using cplx = std::complex<double>;
inline constexpr cplx kI{0.0, 1.0};

struct PauliCoeffs;

/// A complex 2x2 operator. Plain value type; all arithmetic is exact up to
/// floating-point rounding.
class Operator2 {
 public:
  Operator2() : m_(Eigen::Matrix2cd::Zero()) {}
  explicit Operator2(const Eigen::Matrix2cd& m) : m_(m) {}
  Operator2(cplx a00, cplx a01, cplx a10, cplx a11) { m_ << a00, a01, a10, a11; }

  static Operator2 zero() { return {}; }
  static Operator2 identity() { return Operator2(1.0, 0.0, 0.0, 1.0); }
  static Operator2 sigma_x() { return Operator2(0.0, 1.0, 1.0, 0.0); }
  static Operator2 sigma_y() { return Operator2(0.0, -kI, kI, 0.0); }
  static Operator2 sigma_z() { return Operator2(1.0, 0.0, 0.0, -1.0); }
  /// Raising operator |0><1| = (sigma_x + i sigma_y)/2.
  static Operator2 sigma_plus() { return Operator2(0.0, 1.0, 0.0, 0.0); }
  static Operator2 sigma_minus() { return Operator2(0.0, 0.0, 1.0, 0.0); }
  static Operator2 from_pauli(const PauliCoeffs& c);
  /// Traceless operator v . sigma for a complex or real Pauli 3-vector.
  static Operator2 from_pauli_vector(const Eigen::Vector3cd& v);
  static Operator2 from_pauli_vector(const Eigen::Vector3d& v);

  const Eigen::Matrix2cd& matrix() const { return m_; }
  cplx operator()(int row, int col) const { return m_(row, col); }

  Operator2 adjoint() const { return Operator2(m_.adjoint()); }
  cplx trace() const { return m_.trace(); }
  Operator2 traceless_part() const;
  bool is_hermitian(double tol) const;
  double max_abs() const { return m_.cwiseAbs().maxCoeff(); }

  Operator2& operator+=(const Operator2& o) { m_ += o.m_; return *this; }
  Operator2& operator-=(const Operator2& o) { m_ -= o.m_; return *this; }
  Operator2& operator*=(cplx s) { m_ *= s; return *this; }

  friend Operator2 operator+(Operator2 a, const Operator2& b) { return a += b; }
  friend Operator2 operator-(Operator2 a, const Operator2& b) { return a -= b; }
  friend Operator2 operator-(const Operator2& a) { return Operator2(-a.m_); }
  friend Operator2 operator*(const Operator2& a, const Operator2& b) {
    return Operator2(a.m_ * b.m_);
  }
  friend Operator2 operator*(cplx s, Operator2 a) { return a *= s; }
  friend Operator2 operator*(Operator2 a, cplx s) { return a *= s; }
  friend Operator2 operator*(double s, Operator2 a) { return a *= s; }
  friend Operator2 operator*(Operator2 a, double s) { return a *= s; }
  friend Operator2 operator/(Operator2 a, cplx s) { return a *= (1.0 / s); }

 private:
  Eigen::Matrix2cd m_;
};

/// Largest entrywise modulus of a - b.
double max_abs_diff(const Operator2& a, const Operator2& b);

/// M = c0 I + cx sigma_x + cy sigma_y + cz sigma_z.
struct PauliCoeffs {
  cplx c0{}, cx{}, cy{}, cz{};

  Eigen::Vector3cd vector() const { return {cx, cy, cz}; }
};

PauliCoeffs pauli_decompose(const Operator2& m);

/// Real Pauli 3-vector of the traceless Hermitian part (M + M^dagger)/2.
Eigen::Vector3d hermitian_vector(const Operator2& m);

/// <X, Y> = Tr(X^dagger Y) / 2, so sigma_x, sigma_y, sigma_z are orthonormal.
cplx hs_inner(const Operator2& x, const Operator2& y);

Operator2 commutator(const Operator2& x, const Operator2& y);
Operator2 anticommutator(const Operator2& x, const Operator2& y);

enum class AxisNorm {
  Full,  // |v| = 1, A^2 = I
  Half,  // |v| = 1/2
};

/// Traceless Hermitian operator v . sigma with a declared normalization
/// convention. Converting between conventions is explicit.
class HermitianAxis {
 public:
  /// Checks |v| against the convention; throws InvalidBasis on mismatch.
  HermitianAxis(const Eigen::Vector3d& v, AxisNorm convention, const Tolerances& tol = {});

  /// Rescales a nonzero direction onto the requested convention.
  static HermitianAxis normalized(const Eigen::Vector3d& direction, AxisNorm convention);
  /// Requires a traceless Hermitian operator with the declared norm.
  static HermitianAxis from_operator(const Operator2& op, AxisNorm convention,
                                     const Tolerances& tol = {});

  const Eigen::Vector3d& vector() const { return v_; }
  AxisNorm convention() const { return convention_; }
  Operator2 op() const { return Operator2::from_pauli_vector(v_); }

  HermitianAxis to_full() const;
  HermitianAxis to_half() const;
  HermitianAxis negated() const;

 private:
  HermitianAxis(const Eigen::Vector3d& v, AxisNorm convention, int /*unchecked*/)
      : v_(v), convention_(convention) {}

  Eigen::Vector3d v_;
  AxisNorm convention_;
};

/// Gram-Schmidt over the reals with A1 aligned with b1. Both inputs must be
/// traceless Hermitian; throws CollinearInput when they span < 2 dimensions.
std::pair<HermitianAxis, HermitianAxis> orthonormal_pair(const Operator2& b1, const Operator2& b2,
                                                         const Tolerances& tol = {});

/// A3 = [A1, A2] / (2i); right-handed, so v(A3) = v(A1) x v(A2).
HermitianAxis complete_basis(const HermitianAxis& a1, const HermitianAxis& a2,
                             const Tolerances& tol = {});

}  // namespace lindex
