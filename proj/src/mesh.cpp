#include "luagfx/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace luagfx {

std::vector<Edge> derive_edges(const std::vector<Triangle>& triangles) {
  std::vector<Edge> edges;
  edges.reserve(triangles.size() * 3);
  for (const auto& tri : triangles) {
    for (int k = 0; k < 3; ++k) {
      std::uint32_t a = tri[k];
      std::uint32_t b = tri[(k + 1) % 3];
      if (a == b) continue;
      edges.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::optional<std::string> validate(const Mesh& mesh) {
  const std::size_t count = mesh.positions.size();
  if (mesh.normals.size() != count) return "normals and positions differ in length";
  if (mesh.triangles.empty() && mesh.edges.empty()) return "mesh has no primitives";
  for (std::size_t i = 0; i < count; ++i) {
    if (!is_finite(mesh.positions[i])) return "non-finite position " + std::to_string(i);
    if (std::abs(length(mesh.normals[i]) - 1.0) >= 1e-6) return "normal " + std::to_string(i) + " is not unit length";
  }
  for (const auto& tri : mesh.triangles) {
    for (auto index : tri) {
      if (index >= count) return "triangle index " + std::to_string(index) + " out of range";
    }
  }
  for (const auto& edge : mesh.edges) {
    if (edge[0] >= count || edge[1] >= count) return "edge index out of range";
  }
  return std::nullopt;
}

namespace {

std::uint32_t push_vertex(Mesh& mesh, const Vec3& position, const Vec3& normal) {
  mesh.positions.push_back(position);
  mesh.normals.push_back(normal);
  return static_cast<std::uint32_t>(mesh.positions.size() - 1);
}

double slice_angle(int j, int slices) { return 2.0 * std::numbers::pi * j / slices; }

// Outward radial direction; the -sin keeps increasing angles counter-clockwise seen from +y.
Vec3 radial(double theta) { return {std::cos(theta), 0.0, -std::sin(theta)}; }

// Flat disc at height y facing +y or -y.
void add_cap(Mesh& mesh, int slices, double y, bool facing_up) {
  Vec3 normal{0, facing_up ? 1.0 : -1.0, 0};
  std::uint32_t center = push_vertex(mesh, {0, y, 0}, normal);
  std::uint32_t first = static_cast<std::uint32_t>(mesh.positions.size());
  for (int j = 0; j <= slices; ++j) {
    Vec3 rim = radial(slice_angle(j, slices));
    push_vertex(mesh, {rim.x, y, rim.z}, normal);
  }
  for (int j = 0; j < slices; ++j) {
    std::uint32_t a = first + j;
    std::uint32_t b = first + j + 1;
    if (facing_up) {
      mesh.triangles.push_back({center, a, b});
    } else {
      mesh.triangles.push_back({center, b, a});
    }
  }
}

}  // namespace

Mesh gen_cube() {
  struct Face {
    Vec3 normal, u, v;  // u x v == normal
  };
  static constexpr Face kFaces[] = {
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},  {{-1, 0, 0}, {0, 0, 1}, {0, 1, 0}},
      {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},  {{0, -1, 0}, {1, 0, 0}, {0, 0, 1}},
      {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}},  {{0, 0, -1}, {0, 1, 0}, {1, 0, 0}},
  };
  Mesh mesh;
  for (const auto& face : kFaces) {
    Vec3 center = face.normal * 0.5;
    std::uint32_t base = static_cast<std::uint32_t>(mesh.positions.size());
    push_vertex(mesh, center + (-face.u - face.v) * 0.5, face.normal);
    push_vertex(mesh, center + (face.u - face.v) * 0.5, face.normal);
    push_vertex(mesh, center + (face.u + face.v) * 0.5, face.normal);
    push_vertex(mesh, center + (-face.u + face.v) * 0.5, face.normal);
    mesh.triangles.push_back({base, base + 1, base + 2});
    mesh.triangles.push_back({base, base + 2, base + 3});
  }
  mesh.edges = derive_edges(mesh.triangles);
  return mesh;
}

Mesh gen_sphere(int slices, int stacks) {
  if (slices < 3 || stacks < 2) throw std::invalid_argument("sphere needs slices >= 3 and stacks >= 2");
  Mesh mesh;
  for (int i = 0; i <= stacks; ++i) {
    double phi = std::numbers::pi * i / stacks;
    for (int j = 0; j <= slices; ++j) {
      Vec3 r = radial(slice_angle(j, slices));
      Vec3 p{std::sin(phi) * r.x, std::cos(phi), std::sin(phi) * r.z};
      push_vertex(mesh, p, p);
    }
  }
  auto at = [&](int i, int j) { return static_cast<std::uint32_t>(i * (slices + 1) + j); };
  for (int i = 0; i < stacks; ++i) {
    for (int j = 0; j < slices; ++j) {
      std::uint32_t a = at(i, j), b = at(i + 1, j), c = at(i + 1, j + 1), d = at(i, j + 1);
      mesh.triangles.push_back({a, b, c});
      mesh.triangles.push_back({a, c, d});
    }
  }
  mesh.edges = derive_edges(mesh.triangles);
  return mesh;
}

Mesh gen_cone(int slices) {
  if (slices < 3) throw std::invalid_argument("cone needs slices >= 3");
  Mesh mesh;
  const double slope = 1.0 / std::sqrt(2.0);  // radius 1, height 1
  std::uint32_t rim = 0;
  for (int j = 0; j <= slices; ++j) {
    Vec3 r = radial(slice_angle(j, slices));
    std::uint32_t index = push_vertex(mesh, {r.x, -0.5, r.z}, {r.x * slope, slope, r.z * slope});
    if (j == 0) rim = index;
  }
  for (int j = 0; j < slices; ++j) {
    Vec3 r = radial(slice_angle(2 * j + 1, 2 * slices));
    std::uint32_t apex = push_vertex(mesh, {0, 0.5, 0}, {r.x * slope, slope, r.z * slope});
    mesh.triangles.push_back({rim + j, rim + j + 1, apex});
  }
  add_cap(mesh, slices, -0.5, false);
  mesh.edges = derive_edges(mesh.triangles);
  return mesh;
}

Mesh gen_cylinder(int slices) {
  if (slices < 3) throw std::invalid_argument("cylinder needs slices >= 3");
  Mesh mesh;
  std::uint32_t first = 0;
  for (int j = 0; j <= slices; ++j) {
    Vec3 r = radial(slice_angle(j, slices));
    std::uint32_t bottom = push_vertex(mesh, {r.x, -0.5, r.z}, r);
    push_vertex(mesh, {r.x, 0.5, r.z}, r);
    if (j == 0) first = bottom;
  }
  for (int j = 0; j < slices; ++j) {
    std::uint32_t b0 = first + 2 * j, t0 = b0 + 1, b1 = b0 + 2, t1 = b0 + 3;
    mesh.triangles.push_back({b0, b1, t1});
    mesh.triangles.push_back({b0, t1, t0});
  }
  add_cap(mesh, slices, -0.5, false);
  add_cap(mesh, slices, 0.5, true);
  mesh.edges = derive_edges(mesh.triangles);
  return mesh;
}

Mesh gen_grid(int cells) {
  if (cells < 1) throw std::invalid_argument("grid needs cells >= 1");
  Mesh mesh;
  const double half = cells / 2.0;
  for (int i = 0; i <= cells; ++i) {
    for (int k = 0; k <= cells; ++k) push_vertex(mesh, {i - half, 0, k - half}, {0, 1, 0});
  }
  auto at = [&](int i, int k) { return static_cast<std::uint32_t>(i * (cells + 1) + k); };
  for (int i = 0; i < cells; ++i) {
    for (int k = 0; k < cells; ++k) {
      mesh.triangles.push_back({at(i, k), at(i, k + 1), at(i + 1, k + 1)});
      mesh.triangles.push_back({at(i, k), at(i + 1, k + 1), at(i + 1, k)});
    }
  }
  for (int i = 0; i <= cells; ++i) {
    for (int k = 0; k <= cells; ++k) {
      if (k < cells) mesh.edges.push_back({at(i, k), at(i, k + 1)});
      if (i < cells) mesh.edges.push_back({at(i, k), at(i + 1, k)});
    }
  }
  std::sort(mesh.edges.begin(), mesh.edges.end());
  return mesh;
}

}  // namespace luagfx
