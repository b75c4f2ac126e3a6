#include "luagfx/math.hpp"

#include <numbers>

namespace luagfx {

Mat4 translation(const Vec3& offset) {
  Mat4 r = Mat4::identity();
  r(0, 3) = offset.x;
  r(1, 3) = offset.y;
  r(2, 3) = offset.z;
  return r;
}

Mat4 scaling(const Vec3& factors) {
  Mat4 r = Mat4::identity();
  r(0, 0) = factors.x;
  r(1, 1) = factors.y;
  r(2, 2) = factors.z;
  return r;
}

Mat4 rotation(double degrees, const Vec3& axis) {
  Vec3 a = normalize(axis);
  double radians = degrees * std::numbers::pi / 180.0;
  double c = std::cos(radians);
  double s = std::sin(radians);
  double t = 1 - c;
  Mat4 r = Mat4::identity();
  r(0, 0) = t * a.x * a.x + c;
  r(0, 1) = t * a.x * a.y - s * a.z;
  r(0, 2) = t * a.x * a.z + s * a.y;
  r(1, 0) = t * a.x * a.y + s * a.z;
  r(1, 1) = t * a.y * a.y + c;
  r(1, 2) = t * a.y * a.z - s * a.x;
  r(2, 0) = t * a.x * a.z - s * a.y;
  r(2, 1) = t * a.y * a.z + s * a.x;
  r(2, 2) = t * a.z * a.z + c;
  return r;
}

Mat4 look_at(const Vec3& eye, const Vec3& target, const Vec3& up) {
  Vec3 forward = normalize(target - eye);
  Vec3 side = normalize(cross(forward, up));
  Vec3 true_up = cross(side, forward);
  Mat4 r = Mat4::identity();
  r(0, 0) = side.x;
  r(0, 1) = side.y;
  r(0, 2) = side.z;
  r(1, 0) = true_up.x;
  r(1, 1) = true_up.y;
  r(1, 2) = true_up.z;
  r(2, 0) = -forward.x;
  r(2, 1) = -forward.y;
  r(2, 2) = -forward.z;
  r(0, 3) = -dot(side, eye);
  r(1, 3) = -dot(true_up, eye);
  r(2, 3) = dot(forward, eye);
  return r;
}

Mat4 perspective(double fov_y_degrees, double aspect, double near_plane, double far_plane) {
  double f = 1.0 / std::tan(fov_y_degrees * std::numbers::pi / 360.0);
  Mat4 r;
  r(0, 0) = f / aspect;
  r(1, 1) = f;
  r(2, 2) = (far_plane + near_plane) / (near_plane - far_plane);
  r(2, 3) = 2 * far_plane * near_plane / (near_plane - far_plane);
  r(3, 2) = -1;
  return r;
}

Mat3 normal_matrix(const Mat4& model) {
  // inverse-transpose = cofactor matrix / determinant
  auto a = [&](int row, int col) { return model(row, col); };
  Mat3 cof;
  cof(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  cof(0, 1) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
  cof(0, 2) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
  cof(1, 0) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
  cof(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
  cof(1, 2) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
  cof(2, 0) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
  cof(2, 1) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
  cof(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  double det = a(0, 0) * cof(0, 0) + a(0, 1) * cof(0, 1) + a(0, 2) * cof(0, 2);
  Mat3 r;
  for (int i = 0; i < 9; ++i) r.m[i] = cof.m[i] / det;
  return r;
}

}  // namespace luagfx
