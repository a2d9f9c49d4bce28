#pragma once

#include <Eigen/Dense>

namespace lindex {

/// Matrix exponential by scaling and squaring with a fixed [13/13] Pade
/// approximant (Higham 2005: theta_13 = 5.371920351148152, no order
/// selection). Scaling s = max(0, ceil(log2(|A|_1 / theta_13))).
Eigen::Matrix3d expm(const Eigen::Matrix3d& a);
Eigen::Matrix4d expm(const Eigen::Matrix4d& a);
Eigen::Matrix4cd expm(const Eigen::Matrix4cd& a);

}  // namespace lindex
