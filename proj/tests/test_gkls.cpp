#include <gtest/gtest.h>

#include <algorithm>

#include "lindex/errors.hpp"
#include "lindex/gkls.hpp"
#include "lindex/sampling.hpp"
#include "oracles.hpp"

using namespace lindex;

namespace {

GklsSystem single(double rate, const Operator2& l, const Operator2& h = Operator2::zero()) {
  return GklsSystem(h, {{rate, l}});
}

std::array<cplx, 4> sorted_eigs(const Eigen::Matrix4cd& m) {
  const Eigen::Vector4cd ev = Eigen::ComplexEigenSolver<Eigen::Matrix4cd>(m).eigenvalues();
  std::array<cplx, 4> out{ev(0), ev(1), ev(2), ev(3)};
  return out;
}

}  // namespace

TEST(GklsSystem, RejectsInvalidInput) {
  EXPECT_THROW(GklsSystem(Operator2::sigma_plus(), {}), Error);
  EXPECT_THROW(GklsSystem(Operator2::zero(), {{-1.0, Operator2::sigma_x()}}), Error);
  EXPECT_THROW(GklsSystem(Operator2::zero(), {{std::nan(""), Operator2::sigma_x()}}), Error);
}

TEST(Dissipator, Examples) {
  const Operator2 half_id = 0.5 * Operator2::identity();
  EXPECT_LT(dissipator_apply(Operator2::sigma_z(), half_id).max_abs(), 1e-15);
  const Operator2 up(1.0, 0.0, 0.0, 0.0), down(0.0, 0.0, 0.0, 1.0);
  EXPECT_LT(max_abs_diff(dissipator_apply(Operator2::sigma_minus(), up), Operator2(-1.0, 0.0, 0.0, 1.0)), 1e-15);
  EXPECT_LT(dissipator_apply(Operator2::sigma_minus(), down).max_abs(), 1e-15);
}

TEST(Liouvillian, MatchesDirectGenerator) {
  Rng rng(1);
  for (int k = 0; k < 200; ++k) {
    const GklsSystem sys = random_system(rng, 1 + k % 3);
    const Liouvillian4 l = liouvillian_matrix(sys);
    EXPECT_LT((l.mat - oracle::liouvillian(sys)).cwiseAbs().maxCoeff(), 1e-12);
    const Operator2 rho = random_density(rng);
    EXPECT_LT(max_abs_diff(l.apply(rho), generator_apply(sys, rho)), 1e-12);
    // Trace preservation: vec(I)^dag L = 0.
    const Eigen::Vector4cd vec_id(1.0, 0.0, 0.0, 1.0);
    EXPECT_LT((vec_id.adjoint() * l.mat).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(std::abs(generator_apply(sys, rho).trace()), 1e-12);
  }
}

TEST(Liouvillian, ColumnStacking) {
  const Operator2 x(1.0, 2.0, 3.0, 4.0);
  const Eigen::Vector4cd v = vectorize(x);
  EXPECT_EQ(v(1), cplx(3.0));
  EXPECT_EQ(v(2), cplx(2.0));
  EXPECT_EQ(max_abs_diff(unvectorize(v), x), 0.0);
}

TEST(Liouvillian, HermiticityPreserving) {
  Rng rng(2);
  for (int k = 0; k < 50; ++k) {
    const GklsSystem sys = random_system(rng, 2);
    const Liouvillian4 l = liouvillian_matrix(sys);
    const Operator2 x = random_operator(rng);
    EXPECT_LT(max_abs_diff(l.apply(x.adjoint()), l.apply(x).adjoint()), 1e-12);
  }
}

TEST(Liouvillian, SpectrumExamples) {
  EXPECT_EQ(liouvillian_matrix(GklsSystem(Operator2::zero(), {})).mat.cwiseAbs().maxCoeff(), 0.0);

  auto ev = sorted_eigs(liouvillian_matrix(GklsSystem(0.5 * Operator2::sigma_z(), {})).mat);
  EXPECT_LT(oracle::multiset_distance(ev, {cplx(0), cplx(0), cplx(0, 1), cplx(0, -1)}), 1e-12);

  ev = sorted_eigs(liouvillian_matrix(single(1.0, Operator2::sigma_minus())).mat);
  EXPECT_LT(oracle::multiset_distance(ev, {cplx(0), cplx(-0.5), cplx(-0.5), cplx(-1)}), 1e-12);
}

TEST(Liouvillian, SmallTimeStepKeepsPositivity) {
  Rng rng(9);
  for (int k = 0; k < 100; ++k) {
    const GklsSystem sys = random_system(rng, 2);
    double max_rate = 0.0;
    for (const auto& t : sys.terms()) max_rate = std::max(max_rate, t.rate * t.op.matrix().squaredNorm());
    const double dt = 1e-4 / max_rate;
    const Eigen::Vector3d r = random_unit_vector(rng);
    const Operator2 pure = 0.5 * (Operator2::identity() + Operator2::from_pauli_vector(r));
    const Operator2 next = pure + dt * generator_apply(sys, pure);
    const Eigen::Matrix2cd herm = 0.5 * (next.matrix() + next.matrix().adjoint());
    EXPECT_GE(Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd>(herm).eigenvalues().minCoeff(), -1e-9);
  }
}

TEST(BlochGenerator, ReproducesLiouvillianAction) {
  Rng rng(4);
  for (int k = 0; k < 100; ++k) {
    const GklsSystem sys = random_system(rng, 2);
    const auto [a1, a2] = orthonormal_pair(random_hermitian(rng).traceless_part(),
                                           random_hermitian(rng).traceless_part());
    const BlochBasis basis{a1, a2, complete_basis(a1, a2)};
    const AffineBlochGenerator gen = bloch_generator(sys, basis);
    const Operator2 rho = random_density(rng);
    const Eigen::Vector3d r = gen.coordinates(rho);
    EXPECT_LT(max_abs_diff(gen.state(r), rho), 1e-13);
    const Operator2 drho = generator_apply(sys, rho);
    EXPECT_LT((gen.derivative(r) - gen.coordinates(drho)).norm(), 1e-12);

    // Nonzero Liouvillian eigenvalues = eig(m).
    const Eigen::Vector4cd lev = Eigen::ComplexEigenSolver<Eigen::Matrix4cd>(oracle::liouvillian(sys)).eigenvalues();
    std::vector<cplx> v(lev.data(), lev.data() + 4);
    std::sort(v.begin(), v.end(), [](cplx a, cplx b) { return std::abs(a) < std::abs(b); });
    const std::array<cplx, 3> nonzero{v[1], v[2], v[3]};
    EXPECT_LT(oracle::multiset_distance(oracle::eigenvalues3(gen.m), nonzero), 1e-9);
  }
}

TEST(BlochGenerator, RejectsNonOrthonormalBasis) {
  const HermitianAxis x(Eigen::Vector3d::UnitX(), AxisNorm::Full);
  const HermitianAxis z(Eigen::Vector3d::UnitZ(), AxisNorm::Full);
  EXPECT_THROW(bloch_generator(GklsSystem(Operator2::zero(), {}), BlochBasis{x, x, z}), Error);
  EXPECT_THROW(bloch_generator(GklsSystem(Operator2::zero(), {}), BlochBasis{x.to_half(), x, z}), Error);
}

TEST(Transforms, Examples) {
  Rng rng(6);
  const GklsSystem sys = random_system(rng, 2);
  const Liouvillian4 ref = liouvillian_matrix(sys);
  EXPECT_LT(max_abs_diff(liouvillian_matrix(transform_energy_shift(sys, 5.0)), ref), 1e-12);

  const GklsSystem scaled = transform_rescale(single(1.0, 2.0 * Operator2::sigma_minus()), 0, 0.5);
  EXPECT_NEAR(scaled.terms()[0].rate, 4.0, 1e-15);
  EXPECT_LT(max_abs_diff(scaled.terms()[0].op, Operator2::sigma_minus()), 1e-15);
  EXPECT_THROW(transform_rescale(sys, 0, 0.0), Error);
  EXPECT_THROW(transform_rescale(sys, 5, 1.0), std::out_of_range);
}

TEST(Transforms, IdentityShiftExample) {
  // Liouvillian-preserving sign: H' = +sigma_y / 2 (see README, "Conventions").
  const GklsSystem sys = single(1.0, Operator2::sigma_minus() + Operator2::identity());
  const std::array<cplx, 1> alpha{1.0};
  const GklsSystem out = transform_identity_shift(sys, alpha);
  EXPECT_LT(max_abs_diff(out.terms()[0].op, Operator2::sigma_minus()), 1e-15);
  EXPECT_LT(max_abs_diff(out.hamiltonian(), 0.5 * Operator2::sigma_y()), 1e-15);
  EXPECT_LT(max_abs_diff(liouvillian_matrix(out), liouvillian_matrix(sys)), 1e-12);
}

TEST(Transforms, UnitaryMixRejectsNonUnitary) {
  Rng rng(8);
  const GklsSystem sys = random_system(rng, 2);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(2, 2);
  u(0, 1) = 0.1;
  EXPECT_THROW(transform_unitary_mix(sys, u), Error);
}

TEST(Transforms, PreserveLiouvillianOnRandomSystems) {
  Rng rng(10);
  for (int k = 0; k < 200; ++k) {
    const GklsSystem sys = random_system(rng, 2);
    const Liouvillian4 ref = liouvillian_matrix(sys);
    EXPECT_LT(max_abs_diff(liouvillian_matrix(transform_energy_shift(sys, uniform(rng, -5, 5))), ref), 1e-12);
    EXPECT_LT(max_abs_diff(liouvillian_matrix(transform_rescale(sys, k % 2, complex_normal(rng) + 0.2)), ref), 1e-12);
    const std::array<cplx, 2> a{complex_normal(rng), complex_normal(rng)};
    EXPECT_LT(max_abs_diff(liouvillian_matrix(transform_identity_shift(sys, a)), ref), 1e-12);
    EXPECT_LT(max_abs_diff(liouvillian_matrix(transform_unitary_mix(sys, random_unitary(rng, 2))), ref), 1e-12);
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_input(single(1.0, Operator2::sigma_z())), Classification::PureDephasing);
  EXPECT_EQ(classify_input(single(1.0, kI * Operator2::sigma_z())), Classification::PureDephasing);
  EXPECT_EQ(classify_input(single(1.0, Operator2::sigma_minus())), Classification::AdjointNotClosed);
  const GklsSystem pair(Operator2::zero(), {{1.0, Operator2::sigma_minus()}, {2.0, Operator2::sigma_plus()}});
  EXPECT_EQ(classify_input(pair), Classification::ExchangeCandidate);
  const GklsSystem shifted(Operator2::zero(),
                           {{1.0, Operator2::sigma_minus() + Operator2::identity()}, {1.0, Operator2::sigma_plus()}});
  EXPECT_EQ(classify_input(shifted), Classification::ExchangeCandidate);
  const GklsSystem same(Operator2::zero(), {{1.0, Operator2::sigma_minus()}, {1.0, 2.0 * Operator2::sigma_minus()}});
  EXPECT_EQ(classify_input(same), Classification::Collinear);
  const GklsSystem three(Operator2::zero(), {{1.0, Operator2::sigma_x()}, {1.0, Operator2::sigma_y()}, {1.0, Operator2::sigma_z()}});
  try {
    classify_input(three);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedTermCount);
  }
}

TEST(Classify, RandomExchangeSystems) {
  Rng rng(12);
  for (int k = 0; k < 200; ++k) {
    EXPECT_EQ(classify_input(random_exchange_system(rng)), Classification::ExchangeCandidate);
    // Generic complex pairs span a non-Hermitian plane.
    EXPECT_EQ(classify_input(random_system(rng, 2)), Classification::AdjointNotClosed);
  }
}
