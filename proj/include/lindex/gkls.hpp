#pragma once

// GKLS model of a driven-dissipative two-level system:
//
//   d rho/dt = -i [H, rho] + sum_i rate_i (L_i rho L_i^dag - {L_i^dag L_i, rho}/2)
//
// together with its exact 4x4 superoperator, the affine Bloch form, the
// generator-preserving transforms and the input classifier.

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "lindex/algebra.hpp"
#include "lindex/tolerances.hpp"

namespace lindex {

struct JumpTerm {
  double rate = 0.0;  // 1/time, >= 0
  Operator2 op;
};

class GklsSystem {
 public:
  /// Throws InvalidSystem for a non-Hermitian Hamiltonian or a negative or
  /// non-finite rate.
  GklsSystem(Operator2 hamiltonian, std::vector<JumpTerm> terms, const Tolerances& tol = {});

  const Operator2& hamiltonian() const { return hamiltonian_; }
  std::span<const JumpTerm> terms() const { return terms_; }

 private:
  Operator2 hamiltonian_;
  std::vector<JumpTerm> terms_;
};

/// L rho L^dag - {L^dag L, rho}/2.
Operator2 dissipator_apply(const Operator2& jump, const Operator2& rho);

/// The full generator applied to rho.
Operator2 generator_apply(const GklsSystem& sys, const Operator2& rho);

// Column stacking: vec(rho) = (rho00, rho10, rho01, rho11), so that
// vec(A X B) = (B^T kron A) vec(X).
Eigen::Vector4cd vectorize(const Operator2& rho);
Operator2 unvectorize(const Eigen::Vector4cd& v);

struct Liouvillian4 {
  Eigen::Matrix4cd mat = Eigen::Matrix4cd::Zero();

  Operator2 apply(const Operator2& rho) const { return unvectorize(mat * vectorize(rho)); }
};

double max_abs_diff(const Liouvillian4& a, const Liouvillian4& b);

Liouvillian4 liouvillian_matrix(const GklsSystem& sys);

using BlochBasis = std::array<HermitianAxis, 3>;

/// Pauli basis (sigma_x, sigma_y, sigma_z).
BlochBasis pauli_basis();

/// Affine dynamics of r in rho = (I + sum_i r_i A_i) / 2 over a
/// full-normalized orthonormal basis: dr/dt = m r + drive.
struct AffineBlochGenerator {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  Eigen::Vector3d drive = Eigen::Vector3d::Zero();
  BlochBasis basis = pauli_basis();

  Eigen::Vector3d derivative(const Eigen::Vector3d& r) const { return m * r + drive; }
  Operator2 state(const Eigen::Vector3d& r) const;
  Eigen::Vector3d coordinates(const Operator2& rho) const;
};

/// Throws InvalidBasis unless the basis is full-normalized and orthonormal
/// (either handedness is accepted).
AffineBlochGenerator bloch_generator(const Liouvillian4& liouvillian, const BlochBasis& basis,
                                     const Tolerances& tol = {});
AffineBlochGenerator bloch_generator(const GklsSystem& sys, const BlochBasis& basis,
                                     const Tolerances& tol = {});

// Transforms that leave the Liouvillian unchanged.

/// H -> H - e0 I.
GklsSystem transform_energy_shift(const GklsSystem& sys, double e0);

/// L_i -> alpha L_i, rate_i -> rate_i / |alpha|^2. Throws ZeroScale.
GklsSystem transform_rescale(const GklsSystem& sys, std::size_t index, cplx alpha);

/// L_i -> L_i - alpha_i I with the compensating Hamiltonian
/// H -> H + sum_i rate_i/(2i) (alpha_i L_i^dag - alpha_i^* L_i).
GklsSystem transform_identity_shift(const GklsSystem& sys, std::span<const cplx> alphas);

/// Absorbs the rates into the jump operators, mixes them with the unitary u
/// (M_i = sum_k u_ik sqrt(rate_k) L_k) and returns unit rates. Throws
/// NotUnitary.
GklsSystem transform_unitary_mix(const GklsSystem& sys, const Eigen::MatrixXcd& u,
                                 const Tolerances& tol = {});

enum class Classification {
  PureDephasing,
  ExchangeCandidate,
  AdjointNotClosed,
  Collinear,
};

std::string_view to_string(Classification c);

/// Classifies the traceless parts of the jump operators (identity parts only
/// shift the Hamiltonian). Throws UnsupportedTermCount for more than two
/// terms.
Classification classify_input(const GklsSystem& sys, const Tolerances& tol = {});

}  // namespace lindex
