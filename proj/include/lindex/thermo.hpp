#pragma once

// Stationary-state thermodynamics: generalized Gibbs fit
//
//   rho = exp(-beta H + mu N + i lam [H, N]) / Z
//
// and the closed-form stationary states of the three case studies.

#include <Eigen/Dense>

#include "lindex/algebra.hpp"
#include "lindex/dynamics.hpp"

namespace lindex {

struct GibbsFit {
  double beta = 0.0;
  double mu = 0.0;
  double lam = 0.0;
  double log_z = 0.0;
  double residual = 0.0;  // Hilbert-Schmidt norm of the unfitted remainder
};

/// Principal logarithm of a positive definite Hermitian 2x2 operator, via
/// its eigendecomposition. Throws PureState when an eigenvalue is <= 1e-12.
Operator2 matrix_log(const Operator2& rho);

/// Fits the traceless part of log(rho) on {-h, n, i[h, n]}. With [h, n] = 0
/// the fit drops the commutator (lam = 0); with h proportional to n all
/// weight goes to beta (mu = 0). Throws PureState for a state with a zero
/// eigenvalue and RankDeficientBasis when the reduced basis leaves a
/// remainder above 1e-8.
///
/// Note that lam is a coefficient of the exponent, not of the state: for a
/// Bloch vector r, log(rho) has traceless part artanh(|r|) r_hat . sigma, so
/// lam differs from the Bloch commutator component by that scalar factor and
/// by the normalization of i[h, n].
GibbsFit gibbs_fit(const Operator2& rho, const Operator2& h, const Operator2& n);

/// exp(-beta h + mu n + i lam [h, n] - log_z I).
Operator2 gibbs_state(const GibbsFit& fit, const Operator2& h, const Operator2& n);

/// Closed-form (beta, alpha, lambda) stationary coordinates in the case
/// basis. Case1: (g/G, 0, 0); Case2: (g/(G + Gamma/2), 0, 0); Case3 with
/// Den = 4E^2 + G^2 + 2 eps^2:
///   beta   = (g/G) (4E^2 + G^2) / Den
///   alpha  = (g/G) 4 eps E / Den
///   lambda = 2 eps g / Den
/// where g = gp - gm and G = gp + gm. Throws DegenerateDenominator.
Eigen::Vector3d analytic_stationary(CaseKind kind, const CaseParams& p);

}  // namespace lindex
