#include "lindex/thermo.hpp"

#include <cmath>
#include <stdexcept>

#include "lindex/errors.hpp"

namespace lindex {

namespace {

constexpr double kMinEigenvalue = 1e-12;
constexpr double kFitThreshold = 1e-8;

void require_traceless_hermitian(const Operator2& op, const char* name) {
  if (!op.is_hermitian(1e-10) || std::abs(op.trace()) > 1e-10) {
    throw std::invalid_argument(std::string("gibbs_fit: ") + name + " must be traceless Hermitian");
  }
}

}  // namespace

Operator2 matrix_log(const Operator2& rho) {
  if (!rho.is_hermitian(1e-10)) throw std::invalid_argument("matrix_log: operator is not Hermitian");
  const Eigen::Matrix2cd herm = 0.5 * (rho.matrix() + rho.matrix().adjoint());
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(herm);
  const Eigen::Vector2d w = eig.eigenvalues();
  if (!(w.minCoeff() > kMinEigenvalue)) {
    throw Error(ErrorCode::PureState, "state has an eigenvalue <= 1e-12");
  }
  const Eigen::Matrix2cd v = eig.eigenvectors();
  const Eigen::Vector2cd logs(std::log(w(0)), std::log(w(1)));
  return Operator2(v * logs.asDiagonal() * v.adjoint());
}

GibbsFit gibbs_fit(const Operator2& rho, const Operator2& h, const Operator2& n) {
  if (!rho.is_hermitian(1e-10) || std::abs(rho.trace() - 1.0) > 1e-10) {
    throw std::invalid_argument("gibbs_fit: rho must be Hermitian with unit trace");
  }
  require_traceless_hermitian(h, "h");
  require_traceless_hermitian(n, "n");

  const Operator2 log_rho = matrix_log(rho);
  GibbsFit fit;
  fit.log_z = -0.5 * log_rho.trace().real();
  const Eigen::Vector3d target = hermitian_vector(log_rho);

  Eigen::Matrix3d basis;
  basis.col(0) = -hermitian_vector(h);
  basis.col(1) = hermitian_vector(n);
  basis.col(2) = hermitian_vector(kI * commutator(h, n));

  const double scale = std::max({basis.col(0).norm(), basis.col(1).norm(), 1e-300});
  const Eigen::Vector3d sv = Eigen::JacobiSVD<Eigen::Matrix3d>(basis).singularValues();
  Eigen::Vector3d coeff = Eigen::Vector3d::Zero();
  int rank = 3;
  if (sv(2) > 1e-10 * scale * scale && sv(2) > 1e-10 * sv(0)) {
    coeff = basis.partialPivLu().solve(target);
  } else if (sv(1) > 1e-10 * sv(0)) {
    // [h, n] = 0 with independent h, n: commutator term dropped.
    rank = 2;
    coeff.head<2>() = basis.leftCols<2>().colPivHouseholderQr().solve(target);
  } else {
    // h proportional to n (or absent): everything on beta when possible.
    rank = 1;
    const int col = basis.col(0).norm() > 0.0 ? 0 : 1;
    const double nn = basis.col(col).squaredNorm();
    if (nn > 0.0) coeff(col) = basis.col(col).dot(target) / nn;
  }

  fit.beta = coeff(0);
  fit.mu = coeff(1);
  fit.lam = coeff(2);
  // ||R||_HS = sqrt(Tr R^dag R) = sqrt(2) |r| for R = r . sigma.
  fit.residual = std::sqrt(2.0) * (target - basis * coeff).norm();
  if (rank < 3 && fit.residual > kFitThreshold) {
    throw Error(ErrorCode::RankDeficientBasis,
                "state is outside the span of the reduced generalized-Gibbs basis");
  }
  return fit;
}

Operator2 gibbs_state(const GibbsFit& fit, const Operator2& h, const Operator2& n) {
  const Operator2 exponent = -fit.beta * h + fit.mu * n + (fit.lam * kI) * commutator(h, n) -
                             fit.log_z * Operator2::identity();
  const Eigen::Matrix2cd herm = 0.5 * (exponent.matrix() + exponent.matrix().adjoint());
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(herm);
  const Eigen::Vector2cd exps(std::exp(eig.eigenvalues()(0)), std::exp(eig.eigenvalues()(1)));
  return Operator2(eig.eigenvectors() * exps.asDiagonal() * eig.eigenvectors().adjoint());
}

Eigen::Vector3d analytic_stationary(CaseKind kind, const CaseParams& p) {
  if (p.gamma_p < 0.0 || p.gamma_m < 0.0 || p.big_gamma < 0.0) {
    throw std::invalid_argument("analytic_stationary: rates must be >= 0");
  }
  const double total = p.gamma();
  const double net = p.gamma_p - p.gamma_m;
  switch (kind) {
    case CaseKind::Case1:
      if (total == 0.0) throw Error(ErrorCode::DegenerateDenominator, "gamma_p + gamma_m = 0");
      return {net / total, 0.0, 0.0};
    case CaseKind::Case2: {
      const double den = total + 0.5 * p.big_gamma;
      if (den == 0.0) throw Error(ErrorCode::DegenerateDenominator, "gamma_p + gamma_m + Gamma/2 = 0");
      return {net / den, 0.0, 0.0};
    }
    case CaseKind::Case3: {
      const double den = 4.0 * p.e * p.e + total * total + 2.0 * p.eps * p.eps;
      if (total == 0.0 || den == 0.0) {
        throw Error(ErrorCode::DegenerateDenominator, "gamma_p + gamma_m = 0");
      }
      // Grouped so that eps = 0 gives exactly the case-1 value.
      return {net / total * ((4.0 * p.e * p.e + total * total) / den),
              net / total * 4.0 * p.eps * p.e / den,
              2.0 * p.eps * net / den};
    }
  }
  return Eigen::Vector3d::Zero();
}

}  // namespace lindex
