#pragma once

// Independent reference computations used by the tests. Nothing here calls into the
// library's math, so agreement is evidence rather than tautology.

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "luagfx/core.hpp"
#include "luagfx/mesh.hpp"
#include "luagfx/scene.hpp"

namespace oracle {

using Row4 = std::array<std::array<double, 4>, 4>;  // [row][col]

Row4 identity();
Row4 multiply(const Row4& a, const Row4& b);
Row4 translate(double x, double y, double z);
Row4 scale(double x, double y, double z);
/// Right-handed rotation by `degrees` about the (not necessarily unit) axis.
Row4 rotate(double degrees, double x, double y, double z);
/// Converts the library's column-major storage to [row][col].
Row4 from_column_major(const std::array<double, 16>& m);
double max_abs_difference(const Row4& a, const Row4& b);

/// Sum of the unnormalized normals of every triangle that uses `vertex`, normalized.
luagfx::Vec3 incident_normal(const std::vector<luagfx::Vec3>& positions,
                             const std::vector<std::array<std::uint32_t, 3>>& triangles, std::uint32_t vertex);

/// Area of a planar polygon by Newell's method.
double polygon_area(const std::vector<luagfx::Vec3>& polygon);
double triangle_area(const luagfx::Vec3& a, const luagfx::Vec3& b, const luagfx::Vec3& c);

/// Eye ray through the centre of pixel (px, py), y growing downward.
struct Ray {
  luagfx::Vec3 origin;
  luagfx::Vec3 direction;  // unit
};
Ray pixel_ray(const luagfx::Camera& camera, int width, int height, int px, int py);

/// Distance along the ray to the triangle, if hit with every barycentric weight at
/// least `margin` (so hits near edges can be skipped).
std::optional<double> intersect(const Ray& ray, const luagfx::Vec3& a, const luagfx::Vec3& b,
                                const luagfx::Vec3& c, double margin);

}  // namespace oracle

namespace testdata {

std::filesystem::path root();
std::filesystem::path corpus(const std::string& sub);
std::string read_file(const std::filesystem::path& path);
/// Sorted .lua files of a corpus directory.
std::vector<std::filesystem::path> scripts(const std::string& sub);
/// The N of a leading "-- expect-error-line: N" comment, or -1.
int expected_error_line(const std::string& source);
/// Interprets a corpus script with its own directory as the asset root.
luagfx::Interpretation interpret_file(const std::filesystem::path& path);

}  // namespace testdata
