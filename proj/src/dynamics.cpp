#include "lindex/dynamics.hpp"

#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "lindex/errors.hpp"
#include "lindex/expm.hpp"

namespace lindex {

Eigen::Vector3d propagate(const AffineBlochGenerator& gen, const Eigen::Vector3d& r0, double t) {
  Eigen::Matrix4d aug = Eigen::Matrix4d::Zero();
  aug.topLeftCorner<3, 3>() = gen.m;
  aug.topRightCorner<3, 1>() = gen.drive;
  const Eigen::Matrix4d prop = expm(Eigen::Matrix4d(aug * t));
  return prop.topLeftCorner<3, 3>() * r0 + prop.topRightCorner<3, 1>();
}

BlochTrajectory evolve(const AffineBlochGenerator& gen, const Eigen::Vector3d& r0,
                       double t_final, int n_steps) {
  if (n_steps < 1 || !(t_final > 0.0)) {
    throw std::invalid_argument("evolve: need n_steps >= 1 and t_final > 0");
  }
  BlochTrajectory traj;
  traj.basis = gen.basis;
  traj.times.reserve(static_cast<std::size_t>(n_steps) + 1);
  traj.states.reserve(static_cast<std::size_t>(n_steps) + 1);
  for (int k = 0; k <= n_steps; ++k) {
    const double t = t_final * static_cast<double>(k) / static_cast<double>(n_steps);
    traj.times.push_back(t);
    traj.states.push_back(k == 0 ? r0 : propagate(gen, r0, t));
  }
  return traj;
}

Eigen::Vector3d stationary_state(const AffineBlochGenerator& gen) {
  const Eigen::Vector3d s = Eigen::JacobiSVD<Eigen::Matrix3d>(gen.m).singularValues();
  if (!(s(2) > 1e-12 * std::max(1.0, s(0)))) {
    throw Error(ErrorCode::SingularGenerator, "characteristic matrix is singular");
  }
  return -gen.m.partialPivLu().solve(gen.drive);
}

void write_trajectory_csv(std::ostream& os, const BlochTrajectory& traj) {
  os << "t,r1,r2,r3\n";
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const Eigen::Vector3d& r = traj.states[k];
    fmt::print(os, "{:.17g},{:.17g},{:.17g},{:.17g}\n", traj.times[k], r(0), r(1), r(2));
  }
}

BlochBasis case_basis() {
  return {HermitianAxis(Eigen::Vector3d::UnitZ(), AxisNorm::Full),
          HermitianAxis(Eigen::Vector3d::UnitX(), AxisNorm::Full),
          HermitianAxis(-Eigen::Vector3d::UnitY(), AxisNorm::Full)};
}

AffineBlochGenerator case_generator(CaseKind kind, const CaseParams& p) {
  if (p.gamma_p < 0.0 || p.gamma_m < 0.0 || p.big_gamma < 0.0) {
    throw std::invalid_argument("case_generator: rates must be >= 0");
  }
  const double g = p.gamma();
  AffineBlochGenerator gen;
  gen.basis = case_basis();
  gen.drive = {p.gamma_p - p.gamma_m, 0.0, 0.0};
  switch (kind) {
    case CaseKind::Case1:
      gen.m << -g, 0.0, 0.0,
               0.0, -g / 2, p.e,
               0.0, -p.e, -g / 2;
      break;
    case CaseKind::Case2:
      gen.m << -g - p.big_gamma / 2, 0.0, 0.0,
               0.0, -g / 2, p.e,
               0.0, -p.e, -(g + p.big_gamma) / 2;
      break;
    case CaseKind::Case3:
      gen.m << -g, 0.0, -p.eps,
               0.0, -g / 2, p.e,
               p.eps, -p.e, -g / 2;
      break;
  }
  return gen;
}

GklsSystem case_system(CaseKind kind, const CaseParams& p) {
  Operator2 h = (0.5 * p.e) * Operator2::sigma_z();
  if (kind == CaseKind::Case3) h += (0.5 * p.eps) * Operator2::sigma_x();
  std::vector<JumpTerm> terms{{p.gamma_p, Operator2::sigma_plus()},
                              {p.gamma_m, Operator2::sigma_minus()}};
  if (kind == CaseKind::Case2) terms.push_back({0.25 * p.big_gamma, Operator2::sigma_x()});
  return GklsSystem(h, std::move(terms));
}

}  // namespace lindex
