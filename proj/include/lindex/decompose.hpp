#pragma once

// Reduction of a two-jump GKLS generator to its physical form
//
//   d rho/dt = -i [H, rho] - (gp + gm)(rho - I/2) + (gp - gm) N
//              + (gp + gm) [N, [N, rho]] / 2 - G [D, [D, rho]] / 2
//
// with N (exchanged charge) and D (excess dephasing axis) half-normalized and
// orthogonal. Constant terms act as Tr(rho) times the operator, so the form
// is an exact linear superoperator.

#include <optional>

#include "lindex/algebra.hpp"
#include "lindex/gkls.hpp"
#include "lindex/tolerances.hpp"

namespace lindex {

/// Right-handed orthonormal triple, a3 = [a1, a2] / (2i).
struct ExchangeBasis {
  HermitianAxis a1, a2, a3;

  BlochBasis as_bloch_basis() const { return {a1, a2, a3}; }
};

/// Real symmetric in-plane matrix [[m11, m12], [m12, m22]] plus the
/// antisymmetric weight d = sum_i rate_i Im(a_i^* b_i) for L_i = a_i A1 + b_i A2.
struct DissipatorCoefficients {
  double m11 = 0.0, m22 = 0.0, m12 = 0.0, d = 0.0;
};

/// Eigen-rotated basis: the dissipator reads
/// gamma1 (A1 rho A1 - rho) + gamma2 (A2 rho A2 - rho) + gamma3 Tr(rho) A3.
struct InplaneDiagonalization {
  ExchangeBasis basis;
  double gamma1 = 0.0;  // >= gamma2
  double gamma2 = 0.0;
  double gamma3 = 0.0;
};

struct FermionicPair {
  Operator2 sp, sm;
};

struct PhysicalForm {
  Operator2 h_eff;                     // traceless
  HermitianAxis n;                     // half-normalized
  std::optional<HermitianAxis> dphase; // half-normalized, orthogonal to n
  double gamma_p = 0.0;
  double gamma_m = 0.0;
  double big_gamma = 0.0;

  /// False when the exchange channel needs a negative rate; the form is
  /// still an exact rewriting of the generator.
  bool rates_nonnegative() const { return gamma_p >= 0.0 && gamma_m >= 0.0; }
};

enum class RatePolicy {
  Report,  // keep signed rates, flag through rates_nonnegative()
  Reject,  // throw NegativeRate
};

/// Moves identity components of the jump operators into the Hamiltonian and
/// drops the Hamiltonian trace. Terms whose operator is a multiple of the
/// identity become zero operators.
GklsSystem reduce_traceless(const GklsSystem& sys, const Tolerances& tol = {});

/// Orthonormal basis of the Hermitian operators inside span{L1, L2}. Expects
/// a reduced ExchangeCandidate; throws CollinearSpan when that real space has
/// dimension < 2 and NotExchangeCandidate when the span is not adjoint closed.
ExchangeBasis build_exchange_basis(const GklsSystem& reduced, const Tolerances& tol = {});

/// Throws NotInSpan when a jump operator leaves span{a1, a2}.
DissipatorCoefficients dissipator_coefficients(const GklsSystem& reduced,
                                               const ExchangeBasis& basis,
                                               const Tolerances& tol = {});

InplaneDiagonalization diagonalize_inplane(const DissipatorCoefficients& coeffs,
                                           const ExchangeBasis& basis);

/// sp = (A1 + i A2)/2, sm = sp^dagger.
FermionicPair fermionic_pair(const ExchangeBasis& basis);

/// gp + gm = 4 gamma2, gp - gm = 2 gamma3, G = 4 (gamma1 - gamma2).
PhysicalForm extract_physical(const GklsSystem& reduced, const InplaneDiagonalization& diag,
                              RatePolicy policy = RatePolicy::Report,
                              const Tolerances& tol = {});

Liouvillian4 reassemble(const PhysicalForm& pf);

/// Every intermediate of the pipeline, for diagnostics and verification.
struct Decomposition {
  GklsSystem reduced;
  ExchangeBasis basis;
  DissipatorCoefficients coefficients;
  InplaneDiagonalization diagonal;
  FermionicPair pair;
  PhysicalForm form;
};

/// Throws NotExchangeCandidate (message carries the classification name) for
/// inputs outside the supported class.
Decomposition decompose_detailed(const GklsSystem& sys, RatePolicy policy = RatePolicy::Report,
                                 const Tolerances& tol = {});

PhysicalForm decompose(const GklsSystem& sys, RatePolicy policy = RatePolicy::Report,
                       const Tolerances& tol = {});

}  // namespace lindex
