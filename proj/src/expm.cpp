#include "lindex/expm.hpp"

#include <cmath>

namespace lindex {

namespace {

constexpr double kTheta13 = 5.371920351148152;
constexpr double kPade13[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                              1187353796428800.0,  129060195264000.0,   10559470521600.0,
                              670442572800.0,      33522128640.0,       1323241920.0,
                              40840800.0,          960960.0,            16380.0,
                              182.0,               1.0};

template <typename Mat>
Mat pade13_expm(const Mat& input) {
  const double norm1 = input.cwiseAbs().colwise().sum().maxCoeff();
  if (norm1 == 0.0) return Mat::Identity();
  int squarings = 0;
  if (norm1 > kTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / kTheta13)));
  }
  const Mat a = input / std::ldexp(1.0, squarings);
  const Mat id = Mat::Identity();
  const Mat a2 = a * a;
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;
  const double* b = kPade13;

  const Mat u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
                      b[3] * a2 + b[1] * id;
  const Mat u = a * u_inner;
  const Mat v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 +
                b[0] * id;
  Mat r = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) r = r * r;
  return r;
}

}  // namespace

Eigen::Matrix3d expm(const Eigen::Matrix3d& a) { return pade13_expm(a); }
Eigen::Matrix4d expm(const Eigen::Matrix4d& a) { return pade13_expm(a); }
Eigen::Matrix4cd expm(const Eigen::Matrix4cd& a) { return pade13_expm(a); }

}  // namespace lindex
