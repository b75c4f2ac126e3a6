#pragma once

#include <array>
#include <cmath>

namespace luagfx {

struct Vec3 {
  double x = 0;
  double y = 0;
  double z = 0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr bool operator==(const Vec3&) const = default;

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Componentwise product, used for colors.
constexpr Vec3 hadamard(const Vec3& a, const Vec3& b) { return {a.x * b.x, a.y * b.y, a.z * b.z}; }
constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double length(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalize(const Vec3& v) {
  double len = length(v);
  return len > 0 ? v / len : v;
}
inline bool is_finite(const Vec3& v) { return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z); }
inline Vec3 clamp01(const Vec3& v) {
  auto c = [](double t) { return t < 0 ? 0.0 : (t > 1 ? 1.0 : t); };
  return {c(v.x), c(v.y), c(v.z)};
}

struct Vec4 {
  double x = 0;
  double y = 0;
  double z = 0;
  double w = 0;
};

/// 4x4 matrix stored column-major: element (row, col) lives at m[col * 4 + row].
struct Mat4 {
  std::array<double, 16> m{};

  static constexpr Mat4 identity() {
    Mat4 r;
    r.m[0] = r.m[5] = r.m[10] = r.m[15] = 1;
    return r;
  }

  constexpr double operator()(int row, int col) const { return m[col * 4 + row]; }
  constexpr double& operator()(int row, int col) { return m[col * 4 + row]; }

  constexpr bool operator==(const Mat4&) const = default;

  constexpr Mat4 operator*(const Mat4& o) const {
    Mat4 r;
    for (int col = 0; col < 4; ++col) {
      for (int row = 0; row < 4; ++row) {
        double acc = 0;
        for (int k = 0; k < 4; ++k) acc += (*this)(row, k) * o(k, col);
        r(row, col) = acc;
      }
    }
    return r;
  }

  constexpr Vec4 operator*(const Vec4& v) const {
    auto row = [&](int r) { return (*this)(r, 0) * v.x + (*this)(r, 1) * v.y + (*this)(r, 2) * v.z + (*this)(r, 3) * v.w; };
    return {row(0), row(1), row(2), row(3)};
  }

  constexpr Vec3 transform_point(const Vec3& p) const {
    Vec4 r = (*this) * Vec4{p.x, p.y, p.z, 1};
    return {r.x, r.y, r.z};
  }

  constexpr Vec3 transform_vector(const Vec3& v) const {
    Vec4 r = (*this) * Vec4{v.x, v.y, v.z, 0};
    return {r.x, r.y, r.z};
  }

  constexpr bool is_identity() const { return *this == identity(); }
};

struct Mat3 {
  std::array<double, 9> m{};  // column-major

  constexpr double operator()(int row, int col) const { return m[col * 3 + row]; }
  constexpr double& operator()(int row, int col) { return m[col * 3 + row]; }

  constexpr Vec3 operator*(const Vec3& v) const {
    return {(*this)(0, 0) * v.x + (*this)(0, 1) * v.y + (*this)(0, 2) * v.z,
            (*this)(1, 0) * v.x + (*this)(1, 1) * v.y + (*this)(1, 2) * v.z,
            (*this)(2, 0) * v.x + (*this)(2, 1) * v.y + (*this)(2, 2) * v.z};
  }
};

Mat4 translation(const Vec3& offset);
Mat4 scaling(const Vec3& factors);
/// Right-handed rotation about `axis` (normalized internally) by `degrees`.
Mat4 rotation(double degrees, const Vec3& axis);
/// Right-handed view matrix; the camera looks down -z in view space.
Mat4 look_at(const Vec3& eye, const Vec3& target, const Vec3& up);
/// Perspective projection mapping [near, far] to the [-1, 1] clip range.
Mat4 perspective(double fov_y_degrees, double aspect, double near_plane, double far_plane);
/// Inverse-transpose of the upper 3x3 block, for transforming normals.
Mat3 normal_matrix(const Mat4& model);

}  // namespace luagfx
