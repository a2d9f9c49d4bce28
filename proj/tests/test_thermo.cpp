#include <gtest/gtest.h>

#include <cmath>

#include "lindex/decompose.hpp"
#include "lindex/errors.hpp"
#include "lindex/sampling.hpp"
#include "lindex/thermo.hpp"
#include "oracles.hpp"

using namespace lindex;

namespace {

Operator2 state_from_case(const Eigen::Vector3d& r) {
  return case_generator(CaseKind::Case1, {}).state(r);
}

void expect_code(ErrorCode code, auto&& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(MatrixLog, InvertsExponential) {
  Rng rng(1);
  for (int k = 0; k < 200; ++k) {
    const Operator2 rho = random_density(rng);
    const Eigen::Matrix2cd back = oracle::taylor_expm(Eigen::Matrix2cd(matrix_log(rho).matrix()));
    EXPECT_LT((back - rho.matrix()).cwiseAbs().maxCoeff(), 1e-12);
  }
  expect_code(ErrorCode::PureState, [] { matrix_log(Operator2(1.0, 0.0, 0.0, 0.0)); });
}

TEST(GibbsFit, MaximallyMixed) {
  const GibbsFit f = gibbs_fit(0.5 * Operator2::identity(), 0.5 * Operator2::sigma_z(), 0.5 * Operator2::sigma_x());
  EXPECT_NEAR(f.beta, 0.0, 1e-15);
  EXPECT_NEAR(f.mu, 0.0, 1e-15);
  EXPECT_NEAR(f.lam, 0.0, 1e-15);
  EXPECT_NEAR(f.log_z, std::log(2.0), 1e-15);
}

TEST(GibbsFit, Case1DetailedBalance) {
  const Eigen::Vector3d r = stationary_state(case_generator(CaseKind::Case1, {1.0, 0.0, 1.0, 3.0, 0.0}));
  const Operator2 half_z = 0.5 * Operator2::sigma_z();
  const GibbsFit f = gibbs_fit(state_from_case(r), half_z, half_z);
  // beta = -2 artanh(beta_bloch) with beta_bloch = -1/2.
  EXPECT_NEAR(f.beta, std::log(3.0), 1e-12);
  EXPECT_NEAR(f.beta, -2.0 * std::atanh(r(0)), 1e-12);
  EXPECT_EQ(f.mu, 0.0);
  EXPECT_EQ(f.lam, 0.0);
  EXPECT_LT(f.residual, 1e-12);
  // gm/gp = e^{beta E} at E = 1.
  EXPECT_NEAR(std::exp(f.beta), 3.0, 1e-12);
}

TEST(GibbsFit, Case3HasCommutatorTerm) {
  const CaseParams p{1.0, 0.5, 2.0, 1.0, 0.0};
  const Eigen::Vector3d r = stationary_state(case_generator(CaseKind::Case3, p));
  const Operator2 h = 0.5 * p.e * Operator2::sigma_z() + 0.5 * p.eps * Operator2::sigma_x();
  const GibbsFit f = gibbs_fit(state_from_case(r), h, 0.5 * Operator2::sigma_z());
  EXPECT_GT(std::abs(f.lam), 1e-3);
  EXPECT_LT(f.residual, 1e-8);
  EXPECT_LT(max_abs_diff(gibbs_state(f, h, 0.5 * Operator2::sigma_z()), state_from_case(r)), 1e-12);
}

TEST(GibbsFit, ProportionalBasisPutsWeightOnBeta) {
  const Operator2 rho = 0.5 * (Operator2::identity() + 0.3 * Operator2::sigma_z());
  const GibbsFit f = gibbs_fit(rho, Operator2::sigma_z(), 0.5 * Operator2::sigma_z());
  EXPECT_EQ(f.mu, 0.0);
  EXPECT_EQ(f.lam, 0.0);
  EXPECT_NEAR(f.beta, -std::atanh(0.3), 1e-14);
}

TEST(GibbsFit, Errors) {
  const Operator2 z = 0.5 * Operator2::sigma_z();
  expect_code(ErrorCode::PureState, [&] { gibbs_fit(Operator2(1.0, 0.0, 0.0, 0.0), z, z); });
  const Operator2 tilted = 0.5 * (Operator2::identity() + 0.3 * Operator2::sigma_x());
  expect_code(ErrorCode::RankDeficientBasis, [&] { gibbs_fit(tilted, z, z); });
  EXPECT_THROW(gibbs_fit(Operator2::identity(), z, z), std::invalid_argument);
  EXPECT_THROW(gibbs_fit(0.5 * Operator2::identity(), Operator2::identity(), z), std::invalid_argument);
}

TEST(GibbsFit, FaithfulOnRandomStates) {
  Rng rng(2);
  for (int k = 0; k < 500; ++k) {
    const Operator2 rho = random_density(rng);
    const Operator2 h = random_hermitian(rng).traceless_part();
    const Operator2 n = random_hermitian(rng).traceless_part();
    const GibbsFit f = gibbs_fit(rho, h, n);
    EXPECT_LT(f.residual, 1e-8);
    EXPECT_LT(max_abs_diff(gibbs_state(f, h, n), rho), 1e-10);
  }
}

TEST(AnalyticStationary, MatchesLinearSolve) {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const CaseParams p{uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, 0.05, 2),
                       uniform(rng, 0.05, 2), uniform(rng, 0.0, 3)};
    for (CaseKind kind : {CaseKind::Case1, CaseKind::Case2, CaseKind::Case3}) {
      const Eigen::Vector3d exact = stationary_state(case_generator(kind, p));
      EXPECT_LT((analytic_stationary(kind, p) - exact).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

TEST(AnalyticStationary, Limits) {
  EXPECT_EQ(analytic_stationary(CaseKind::Case1, {1.0, 0.0, 0.7, 0.7, 0.0}), Eigen::Vector3d::Zero());
  const CaseParams p{1.3, 0.0, 2.0, 0.5, 0.0};
  EXPECT_EQ(analytic_stationary(CaseKind::Case3, p), analytic_stationary(CaseKind::Case1, p));
  expect_code(ErrorCode::DegenerateDenominator,
              [] { analytic_stationary(CaseKind::Case1, {1.0, 0.0, 0.0, 0.0, 0.0}); });
  expect_code(ErrorCode::DegenerateDenominator,
              [] { analytic_stationary(CaseKind::Case3, {1.0, 0.5, 0.0, 0.0, 0.0}); });
}

TEST(NonCommutation, LambdaVanishesOnlyWithoutTilt) {
  Rng rng(4);
  for (int k = 0; k < 100; ++k) {
    CaseParams p{uniform(rng, 0.2, 2), uniform(rng, 0.2, 2), uniform(rng, 0.1, 2), uniform(rng, 0.1, 2), 0.0};
    if (std::abs(p.gamma_p - p.gamma_m) < 0.05) p.gamma_p += 0.1;
    for (double eps : {0.0, p.eps}) {
      p.eps = eps;
      const GklsSystem sys = case_system(CaseKind::Case3, p);
      const PhysicalForm pf = decompose(sys);
      const AffineBlochGenerator gen = bloch_generator(sys, pauli_basis());
      const GibbsFit f = gibbs_fit(gen.state(stationary_state(gen)), pf.h_eff, pf.n.op());
      if (eps == 0.0) {
        EXPECT_LT(std::abs(f.lam), 1e-12);
      } else {
        EXPECT_GT(std::abs(f.lam), 10.0 * f.residual);
        EXPECT_GT(std::abs(f.lam), 1e-6);
      }
    }
  }
}
