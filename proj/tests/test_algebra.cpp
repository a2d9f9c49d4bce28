#include <gtest/gtest.h>

#include "lindex/algebra.hpp"
#include "lindex/errors.hpp"
#include "lindex/sampling.hpp"

using namespace lindex;

namespace {

void expect_op_near(const Operator2& a, const Operator2& b, double tol = 1e-12) {
  EXPECT_LT(max_abs_diff(a, b), tol) << "\n" << a.matrix() << "\nvs\n" << b.matrix();
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

TEST(Pauli, DecomposesBasisElements) {
  const PauliCoeffs x = pauli_decompose(Operator2::sigma_x());
  EXPECT_EQ(x.c0, cplx(0));
  EXPECT_EQ(x.cx, cplx(1));
  EXPECT_EQ(x.cy, cplx(0));
  EXPECT_EQ(x.cz, cplx(0));

  const PauliCoeffs id = pauli_decompose(Operator2::identity());
  EXPECT_EQ(id.c0, cplx(1));
  EXPECT_EQ(id.cz, cplx(0));

  const PauliCoeffs sp = pauli_decompose(Operator2::sigma_plus());
  EXPECT_NEAR(std::abs(sp.c0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sp.cx - 0.5), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sp.cy - 0.5 * kI), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sp.cz), 0.0, 1e-15);
}

TEST(Pauli, ReconstructionIsExact) {
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const Operator2 m = random_operator(rng);
    expect_op_near(Operator2::from_pauli(pauli_decompose(m)), m, 1e-14);
  }
}

TEST(Pauli, TracelessSquareIsScalar) {
  Rng rng(11);
  for (int k = 0; k < 1000; ++k) {
    const Operator2 m = random_operator(rng).traceless_part();
    const PauliCoeffs c = pauli_decompose(m);
    const cplx s = c.cx * c.cx + c.cy * c.cy + c.cz * c.cz;
    EXPECT_LT(max_abs_diff(m * m, s * Operator2::identity()), 1e-12);
  }
}

TEST(HilbertSchmidt, InnerProductExamples) {
  EXPECT_NEAR(std::abs(hs_inner(Operator2::sigma_x(), Operator2::sigma_x()) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(hs_inner(Operator2::sigma_x(), Operator2::sigma_y())), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(hs_inner(Operator2::sigma_plus(), Operator2::sigma_plus()) - 0.5), 0.0, 1e-15);
}

TEST(HilbertSchmidt, ConjugateSymmetric) {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const Operator2 x = random_operator(rng), y = random_operator(rng);
    EXPECT_NEAR(std::abs(hs_inner(x, y) - std::conj(hs_inner(y, x))), 0.0, 1e-13);
  }
}

TEST(Commutators, PauliAlgebra) {
  const Operator2 sx = Operator2::sigma_x(), sy = Operator2::sigma_y(), sz = Operator2::sigma_z();
  expect_op_near(commutator(sx, sy), 2.0 * kI * sz);
  expect_op_near(anticommutator(sx, sy), Operator2::zero());
  expect_op_near(commutator(0.5 * sz, commutator(0.5 * sz, 0.5 * sx)), 0.5 * sx);
}

TEST(Commutators, AnticommutatorOfTracelessHermitian) {
  Rng rng(5);
  for (int k = 0; k < 200; ++k) {
    const Operator2 x = random_hermitian(rng).traceless_part();
    const Operator2 y = random_hermitian(rng).traceless_part();
    // {X, Y} = 2 <X, Y> I with <X,Y> = Tr(X^dag Y)/2 and the Pauli-vector convention.
    expect_op_near(anticommutator(x, y), 2.0 * hs_inner(x, y) * Operator2::identity());
  }
}

TEST(HermitianAxis, NormConventionChecked) {
  EXPECT_NO_THROW(HermitianAxis(Eigen::Vector3d(0, 0, 1), AxisNorm::Full));
  EXPECT_NO_THROW(HermitianAxis(Eigen::Vector3d(0, 0, 0.5), AxisNorm::Half));
  expect_code(ErrorCode::InvalidBasis, [] { HermitianAxis(Eigen::Vector3d(0, 0, 0.5), AxisNorm::Full); });
  expect_code(ErrorCode::InvalidBasis, [] { HermitianAxis(Eigen::Vector3d(0, 0, 1), AxisNorm::Half); });
}

TEST(HermitianAxis, ConversionsAreExact) {
  const HermitianAxis a = HermitianAxis::normalized(Eigen::Vector3d(1, 2, -2), AxisNorm::Full);
  const HermitianAxis h = a.to_half();
  EXPECT_EQ(h.convention(), AxisNorm::Half);
  EXPECT_NEAR(h.vector().norm(), 0.5, 1e-15);
  EXPECT_LT((h.to_full().vector() - a.vector()).norm(), 1e-15);
  EXPECT_EQ((a.negated().vector() + a.vector()).norm(), 0.0);
  expect_op_near(a.op() * a.op(), Operator2::identity(), 1e-14);
}

TEST(OrthonormalPair, Examples) {
  const auto [a1, a2] = orthonormal_pair(Operator2::sigma_x(), Operator2::sigma_y());
  expect_op_near(a1.op(), Operator2::sigma_x());
  expect_op_near(a2.op(), Operator2::sigma_y());

  const auto [b1, b2] = orthonormal_pair(2.0 * Operator2::sigma_x(), Operator2::sigma_x() + Operator2::sigma_y());
  expect_op_near(b1.op(), Operator2::sigma_x());
  expect_op_near(b2.op(), Operator2::sigma_y());

  expect_code(ErrorCode::CollinearInput,
              [] { orthonormal_pair(Operator2::sigma_x(), 3.0 * Operator2::sigma_x()); });
  expect_code(ErrorCode::InvalidBasis,
              [] { orthonormal_pair(Operator2::sigma_plus(), Operator2::sigma_x()); });
}

TEST(CompleteBasis, Examples) {
  auto axis = [](double x, double y, double z) {
    return HermitianAxis(Eigen::Vector3d(x, y, z), AxisNorm::Full);
  };
  expect_op_near(complete_basis(axis(1, 0, 0), axis(0, 1, 0)).op(), Operator2::sigma_z());
  expect_op_near(complete_basis(axis(0, 1, 0), axis(1, 0, 0)).op(), -Operator2::sigma_z());
  expect_op_near(complete_basis(axis(0, 0, 1), axis(1, 0, 0)).op(), Operator2::sigma_y());
  expect_code(ErrorCode::InvalidBasis, [&] { complete_basis(axis(1, 0, 0), axis(1, 0, 0)); });
  expect_code(ErrorCode::InvalidBasis,
              [&] { complete_basis(axis(1, 0, 0).to_half(), axis(0, 1, 0)); });
}

TEST(CompleteBasis, RightHandedAndNormalized) {
  Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    const Operator2 b1 = random_hermitian(rng).traceless_part();
    const Operator2 b2 = random_hermitian(rng).traceless_part();
    const auto [a1, a2] = orthonormal_pair(b1, b2);
    const HermitianAxis a3 = complete_basis(a1, a2);
    expect_op_near(a3.op() * a3.op(), Operator2::identity());
    EXPECT_LT(std::abs((a3.op() * a1.op()).trace()), 1e-12);
    EXPECT_LT(std::abs((a3.op() * a2.op()).trace()), 1e-12);
    EXPECT_LT((a3.vector() - a1.vector().cross(a2.vector())).norm(), 1e-12);
    // A1 stays aligned with the first input.
    EXPECT_GT(a1.vector().dot(hermitian_vector(b1)), 0.0);
  }
}
