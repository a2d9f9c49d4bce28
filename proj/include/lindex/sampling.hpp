#pragma once

// Seeded random inputs for property checks. Everything draws from a
// std::mt19937_64 passed by the caller, so a seed fixes the whole stream.

#include <random>

#include <Eigen/Dense>

#include "lindex/algebra.hpp"
#include "lindex/gkls.hpp"

namespace lindex {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);
cplx complex_normal(Rng& rng);

Operator2 random_operator(Rng& rng);
Operator2 random_hermitian(Rng& rng);
Eigen::Vector3d random_unit_vector(Rng& rng);

// Strictly mixed state, Bloch radius at most max_radius < 1.
Operator2 random_density(Rng& rng, double max_radius = 0.95);

// Haar-ish n x n unitary (QR of a complex Gaussian matrix with phase fix).
Eigen::MatrixXcd random_unitary(Rng& rng, int n);

// Two jump operators spanning a random real plane of Hermitian operators
// (so the pair is adjoint-closed), with random identity parts, random
// Hermitian H and rates in [0.1, 2].
GklsSystem random_exchange_system(Rng& rng);

// n_terms arbitrary jump operators, random H, rates in [0.1, 2].
GklsSystem random_system(Rng& rng, int n_terms);

}  // namespace lindex
