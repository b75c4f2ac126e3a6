#include "luagfx/mesh.hpp"

#include <charconv>
#include <map>
#include <utility>

namespace luagfx {
namespace {

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<double> to_double(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) return std::nullopt;
  return value;
}

Vec3 read_vector(const std::vector<std::string_view>& fields, int line, const char* what) {
  if (fields.size() < 4) throw ObjError(std::string("malformed ") + what + " line", line);
  auto x = to_double(fields[1]), y = to_double(fields[2]), z = to_double(fields[3]);
  if (!x || !y || !z) throw ObjError(std::string("malformed ") + what + " line", line);
  return {*x, *y, *z};
}

// Resolves a 1-based or negative OBJ index against `count` elements read so far.
std::uint32_t resolve_index(std::string_view text, std::size_t count, int line, const char* what) {
  long long raw = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), raw);
  if (ec != std::errc() || ptr != text.data() + text.size() || raw == 0) {
    throw ObjError(std::string("malformed ") + what + " index '" + std::string(text) + "'", line);
  }
  long long resolved = raw > 0 ? raw - 1 : static_cast<long long>(count) + raw;
  if (resolved < 0 || resolved >= static_cast<long long>(count)) {
    throw ObjError(std::string(what) + " index " + std::to_string(raw) + " out of range", line);
  }
  return static_cast<std::uint32_t>(resolved);
}

}  // namespace

ObjModel parse_obj(std::string_view text) {
  ObjModel model;
  std::size_t texcoords = 0;
  int line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto fields = split_whitespace(line);
    if (fields.empty()) continue;

    const std::string_view directive = fields[0];
    if (directive == "v") {
      model.positions.push_back(read_vector(fields, line_number, "vertex"));
    } else if (directive == "vn") {
      model.normals.push_back(read_vector(fields, line_number, "normal"));
    } else if (directive == "vt") {
      ++texcoords;
    } else if (directive == "f") {
      if (fields.size() < 4) throw ObjError("face needs at least 3 vertices", line_number);
      std::vector<ObjCorner> face;
      for (std::size_t i = 1; i < fields.size(); ++i) {
        std::string_view corner = fields[i];
        std::size_t slash1 = corner.find('/');
        ObjCorner out{resolve_index(corner.substr(0, slash1), model.positions.size(), line_number, "vertex"), {}};
        if (slash1 != std::string_view::npos) {
          std::string_view rest = corner.substr(slash1 + 1);
          std::size_t slash2 = rest.find('/');
          std::string_view tex = rest.substr(0, slash2);
          if (!tex.empty()) resolve_index(tex, texcoords, line_number, "texture");
          if (slash2 != std::string_view::npos) {
            std::string_view normal = rest.substr(slash2 + 1);
            out.normal = resolve_index(normal, model.normals.size(), line_number, "normal");
          }
        }
        face.push_back(out);
      }
      model.faces.push_back(std::move(face));
    }
    // o, g, s, usemtl, mtllib and anything else carry nothing we render
  }
  return model;
}

Mesh compute_vertex_normals(const ObjModel& model) {
  if (model.faces.empty()) throw std::invalid_argument("OBJ model has no faces");
  constexpr Vec3 kFallbackNormal{0, 1, 0};
  Mesh mesh;

  bool explicit_normals = true;
  for (const auto& face : model.faces) {
    for (const auto& corner : face) explicit_normals = explicit_normals && corner.normal.has_value();
  }

  if (explicit_normals) {
    // A position may carry different normals on different faces: one vertex per pair.
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> vertex_of;
    auto vertex = [&](const ObjCorner& corner) {
      auto key = std::make_pair(corner.position, *corner.normal);
      auto [it, inserted] = vertex_of.try_emplace(key, static_cast<std::uint32_t>(mesh.positions.size()));
      if (inserted) {
        Vec3 n = model.normals[*corner.normal];
        mesh.positions.push_back(model.positions[corner.position]);
        mesh.normals.push_back(length(n) > 0 ? normalize(n) : kFallbackNormal);
      }
      return it->second;
    };
    for (const auto& face : model.faces) {
      for (std::size_t k = 1; k + 1 < face.size(); ++k) {
        mesh.triangles.push_back({vertex(face[0]), vertex(face[k]), vertex(face[k + 1])});
      }
    }
  } else {
    mesh.positions = model.positions;
    std::vector<Vec3> sums(model.positions.size());
    for (const auto& face : model.faces) {
      for (std::size_t k = 1; k + 1 < face.size(); ++k) {
        Triangle tri{face[0].position, face[k].position, face[k + 1].position};
        mesh.triangles.push_back(tri);
        const Vec3& p0 = model.positions[tri[0]];
        Vec3 area_weighted = cross(model.positions[tri[1]] - p0, model.positions[tri[2]] - p0);
        for (auto index : tri) sums[index] += area_weighted;
      }
    }
    mesh.normals.reserve(sums.size());
    for (const auto& sum : sums) mesh.normals.push_back(length(sum) > 0 ? normalize(sum) : kFallbackNormal);
  }
  mesh.edges = derive_edges(mesh.triangles);
  return mesh;
}

}  // namespace luagfx
