#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "luagfx/math.hpp"
#include "luagfx/source_span.hpp"

namespace luagfx {

using Triangle = std::array<std::uint32_t, 3>;
using Edge = std::array<std::uint32_t, 2>;

/// Indexed geometry with one unit normal per position. `edges` holds the unique
/// segments drawn in Lines mode.
struct Mesh {
  std::vector<Vec3> positions;
  std::vector<Vec3> normals;
  std::vector<Triangle> triangles;
  std::vector<Edge> edges;

  bool operator==(const Mesh&) const = default;
};

/// Unique undirected edges of a triangle list, each stored (low, high), sorted.
std::vector<Edge> derive_edges(const std::vector<Triangle>& triangles);

/// Returns a description of the first broken Mesh invariant, or nullopt.
std::optional<std::string> validate(const Mesh& mesh);

// ---- canonical primitives --------------------------------------------------

/// Unit cube centred at the origin, 4 vertices per face so faces keep hard edges.
Mesh gen_cube();
/// Unit lat/long sphere. Pole quads are split like every other quad, so the
/// triangle count is exactly 2 * slices * stacks.
Mesh gen_sphere(int slices = 40, int stacks = 36);
/// Radius 1, height 1, apex at y = +0.5, capped base at y = -0.5.
Mesh gen_cone(int slices = 32);
/// Radius 1, height 1, capped at y = +-0.5.
Mesh gen_cylinder(int slices = 32);
/// cells x cells unit squares on the XZ plane, centred at the origin, normals +y.
/// Edges are the cell borders, not the triangle diagonals.
Mesh gen_grid(int cells = 10);

// ---- Wavefront OBJ ---------------------------------------------------------

struct ObjCorner {
  std::uint32_t position;              // 0-based
  std::optional<std::uint32_t> normal;  // 0-based
};

struct ObjModel {
  std::vector<Vec3> positions;
  std::vector<Vec3> normals;
  std::vector<std::vector<ObjCorner>> faces;  // polygons, >= 3 corners each
};

class ObjError : public std::runtime_error {
 public:
  ObjError(const std::string& message, int line)
      : std::runtime_error("OBJ line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads v / vn / vt / f directives. Indices are normalized to 0-based at the line
/// they appear on, so negative indices count back from the data read so far.
ObjModel parse_obj(std::string_view text);

/// Fan-triangulates the faces and produces per-vertex normals: the file's own normals
/// when every corner has one, otherwise the normalized sum of incident (unnormalized)
/// face normals.
Mesh compute_vertex_normals(const ObjModel& model);

}  // namespace luagfx
