#pragma once

// Time evolution, stationary states and the spectral / exceptional-point
// analysis of the affine Bloch dynamics.

#include <array>
#include <iosfwd>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "lindex/algebra.hpp"
#include "lindex/gkls.hpp"

namespace lindex {

struct BlochTrajectory {
  std::vector<double> times;
  std::vector<Eigen::Vector3d> states;
  BlochBasis basis = pauli_basis();
};

/// r(t) = e^{mt} r0 + int_0^t e^{ms} ds drive, evaluated as the exponential
/// of the augmented 4x4 matrix [[m, drive], [0, 0]]; no inverse of m needed.
Eigen::Vector3d propagate(const AffineBlochGenerator& gen, const Eigen::Vector3d& r0, double t);

/// Samples at t_k = t_final k / n_steps, k = 0..n_steps. Each sample is an
/// independent exponential, so there is no step-to-step error accumulation.
BlochTrajectory evolve(const AffineBlochGenerator& gen, const Eigen::Vector3d& r0,
                       double t_final, int n_steps);

/// r* = -m^{-1} drive. Throws SingularGenerator when m is singular (e.g.
/// purely unitary dynamics).
Eigen::Vector3d stationary_state(const AffineBlochGenerator& gen);

void write_trajectory_csv(std::ostream& os, const BlochTrajectory& traj);

// Case studies. Coordinates are (beta, alpha, lambda) on the half-normalized
// operators (N, D, i[N, D]) with N = sigma_z/2, D = sigma_x/2, i.e. the
// full-normalized basis (sigma_z, sigma_x, -sigma_y).

enum class CaseKind {
  Case1,  // thermalization, N = H
  Case2,  // N = H plus dephasing along D
  Case3,  // H = E N + eps D, no extra dephasing
};

struct CaseParams {
  double e = 0.0;
  double eps = 0.0;
  double gamma_p = 0.0;
  double gamma_m = 0.0;
  double big_gamma = 0.0;

  double gamma() const { return gamma_p + gamma_m; }
};

BlochBasis case_basis();

/// The characteristic matrices M0 / M1 / M2 with drive (gp - gm, 0, 0).
AffineBlochGenerator case_generator(CaseKind kind, const CaseParams& p);

/// A GKLS realization of the same case: H = E N + eps D (eps only for
/// Case3), jumps (gp, sigma_+), (gm, sigma_-), and for Case2 (G/4, sigma_x).
GklsSystem case_system(CaseKind kind, const CaseParams& p);

// Spectrum of the Case3 matrix in units gamma = 1:
//   lambda^3 + 2 lambda^2 + lambda (5/4 + eps^2 + E^2) + (1/4 + eps^2/2 + E^2) = 0
// X = -1/4 + 3 eps^2 + 3 E^2, Y = -1/4 + 9 eps^2 / 2 - 9 E^2, D = Y^2 + 4 X^3.
// D > 0: one real root and a complex pair; D < 0: three real roots;
// D = 0: second-order EP; X = Y = 0: third-order EP at lambda = -2/3.

enum class EpKind { None, EP2, EP3 };

std::string_view to_string(EpKind kind);

struct SpectrumResult {
  std::array<cplx, 3> eigenvalues{};  // real root first, then the pair
  EpKind ep = EpKind::None;
  double discriminant = 0.0;  // Y^2 + 4 X^3
  double x = 0.0;
  double y = 0.0;
  cplx z{};  // sqrt(discriminant) with the branch used by the closed form
};

struct CubicInvariants {
  double x, y, discriminant;
};

CubicInvariants cubic_invariants(double e_over_gamma, double eps_over_gamma);

/// Closed-form (Cardano) eigenvalues. The sign of Z is chosen to maximize
/// |Y + Z| and the principal cube root of Y + Z is used.
SpectrumResult cubic_eigenvalues(double e_over_gamma, double eps_over_gamma, double tol_ep = 1e-8);

/// EP3 iff |X| < tol and |Y| < tol; EP2 iff |D| < tol; else None.
EpKind classify_ep(const SpectrumResult& s, double tol_ep);

/// The Case3 characteristic matrix M2 at gamma = 1.
Eigen::Matrix3d characteristic_matrix(double e_over_gamma, double eps_over_gamma);

struct Ep2Point {
  double e_over_gamma, eps_over_gamma;
};

struct Ep3Point {
  double e_over_gamma, eps_over_gamma;
  double residual;  // max(|X|, |Y|)
};

/// Node-sampled discriminant map over (E/gamma, eps/gamma). Storage is
/// e-major: index = i_e * n_eps + i_eps.
struct EpMap {
  std::vector<double> e_axis;
  std::vector<double> eps_axis;
  std::vector<double> discriminant;
  std::vector<EpKind> flags;
  std::vector<Ep2Point> ep2;   // sign changes refined by bisection along edges
  std::vector<Ep3Point> cusps; // X = Y = 0 from 2-d Newton

  double at(std::size_t i_e, std::size_t i_eps) const {
    return discriminant[i_e * eps_axis.size() + i_eps];
  }
};

struct GridRange {
  double lo, hi;
};

/// Bisection of D along the segment (e0, eps0) -> (e1, eps1) whose endpoints
/// have opposite sign; stops when the parameter step is below `step_tol`.
Ep2Point bisect_ep2(double e0, double eps0, double e1, double eps1, double step_tol = 1e-9);

/// Throws std::invalid_argument unless n_e, n_eps >= 2.
EpMap ep_map(GridRange e_range, GridRange eps_range, int n_e, int n_eps, double tol_ep = 1e-8);

/// Header e_over_gamma,eps_over_gamma,discriminant,region; region is "real"
/// for D <= 0 and "complex" otherwise.
void write_epmap_csv(std::ostream& os, const EpMap& map);
/// Header e_over_gamma,eps_over_gamma,residual.
void write_cusps_csv(std::ostream& os, const EpMap& map);
/// Header e_over_gamma,eps_over_gamma.
void write_ep2_csv(std::ostream& os, const EpMap& map);

}  // namespace lindex
