#include "lindex/sampling.hpp"

#include <cmath>

namespace lindex {

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

cplx complex_normal(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

Operator2 random_operator(Rng& rng) {
  const cplx a = complex_normal(rng), b = complex_normal(rng);
  const cplx c = complex_normal(rng), d = complex_normal(rng);
  return Operator2(a, b, c, d);
}

Operator2 random_hermitian(Rng& rng) {
  const Operator2 x = random_operator(rng);
  return 0.5 * (x + x.adjoint());
}

Eigen::Vector3d random_unit_vector(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Vector3d v;
  do {
    for (int i = 0; i < 3; ++i) v(i) = n(rng);
  } while (v.norm() < 1e-3);
  return v.normalized();
}

Operator2 random_density(Rng& rng, double max_radius) {
  const double radius = max_radius * std::cbrt(uniform(rng, 0.0, 1.0));
  const Eigen::Vector3d r = radius * random_unit_vector(rng);
  return 0.5 * (Operator2::identity() + Operator2::from_pauli_vector(r));
}

Eigen::MatrixXcd random_unitary(Rng& rng, int n) {
  Eigen::MatrixXcd z(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) z(i, j) = complex_normal(rng);
  }
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

GklsSystem random_exchange_system(Rng& rng) {
  const Eigen::Vector3d u = random_unit_vector(rng);
  Eigen::Vector3d w = random_unit_vector(rng);
  w = (w - w.dot(u) * u).normalized();
  const Operator2 b1 = Operator2::from_pauli_vector(u);
  const Operator2 b2 = Operator2::from_pauli_vector(w);

  std::vector<JumpTerm> terms;
  for (int i = 0; i < 2; ++i) {
    const cplx c1 = complex_normal(rng), c2 = complex_normal(rng);
    const cplx shift = 0.5 * complex_normal(rng);
    terms.push_back({uniform(rng, 0.1, 2.0), c1 * b1 + c2 * b2 + shift * Operator2::identity()});
  }
  return GklsSystem(random_hermitian(rng), std::move(terms));
}

GklsSystem random_system(Rng& rng, int n_terms) {
  std::vector<JumpTerm> terms;
  for (int i = 0; i < n_terms; ++i) terms.push_back({uniform(rng, 0.1, 2.0), random_operator(rng)});
  return GklsSystem(random_hermitian(rng), std::move(terms));
}

}  // namespace lindex
