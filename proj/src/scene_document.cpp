#include "luagfx/scene_document.hpp"

#include <charconv>
#include <cmath>
#include <span>

#include <json.hpp>

namespace luagfx {
namespace {

using nlohmann::json;

class Writer {
 public:
  std::string take() { return std::move(out_); }

  void open(std::string_view key, char bracket) {
    begin_entry(key);
    out_ += bracket;
    ++depth_;
    first_ = true;
  }

  void close(char bracket) {
    --depth_;
    if (!first_) newline();
    out_ += bracket;
    first_ = false;
  }

  void raw(std::string_view key, std::string_view literal) {
    begin_entry(key);
    out_ += literal;
  }

  void number(std::string_view key, double value) { raw(key, format_json_number(value)); }
  void string(std::string_view key, std::string_view value) { raw(key, quote_json(value)); }

  // Packs values onto as few lines as fit, each continuation line indented one level deeper.
  template <typename Range, typename Format>
  void packed(std::string_view key, const Range& values, Format format) {
    begin_entry(key);
    if (values.empty()) {
      out_ += "[]";
      return;
    }
    out_ += '[';
    std::size_t line_start = out_.rfind('\n') + 1;
    std::string indent(2 * (depth_ + 1), ' ');
    bool first = true;
    for (const auto& value : values) {
      std::string text = format(value);
      std::size_t needed = text.size() + 2;  // separator plus a possible closing bracket or comma
      if (first) {
        if (out_.size() - line_start + needed > kMaxDocumentLine) {
          out_ += '\n';
          line_start = out_.size();
          out_ += indent;
        }
      } else {
        out_ += ',';
        if (out_.size() - line_start + 1 + needed > kMaxDocumentLine) {
          out_ += '\n';
          line_start = out_.size();
          out_ += indent;
        } else {
          out_ += ' ';
        }
      }
      out_ += text;
      first = false;
    }
    out_ += ']';
  }

  void vec3(std::string_view key, const Vec3& v) {
    const double values[3] = {v.x, v.y, v.z};
    packed(key, std::span<const double>(values), format_json_number);
  }

 private:
  void newline() {
    out_ += '\n';
    out_.append(2 * depth_, ' ');
  }

  void begin_entry(std::string_view key) {
    if (depth_ > 0) {
      if (!first_) out_ += ',';
      newline();
    }
    first_ = false;
    if (!key.empty()) {
      out_ += quote_json(key);
      out_ += ": ";
    }
  }

  std::string out_;
  int depth_ = 0;
  bool first_ = true;
};

std::string format_index(std::uint32_t value) { return std::to_string(value); }

void write_material(Writer& w, const Material& m) {
  w.open("material", '{');
  w.vec3("ambient", m.ambient);
  w.vec3("diffuse", m.diffuse);
  w.vec3("specular", m.specular);
  w.number("shininess", m.shininess);
  w.close('}');
}

void write_mesh(Writer& w, const Mesh& mesh) {
  std::vector<double> positions, normals;
  std::vector<std::uint32_t> triangles, edges;
  positions.reserve(mesh.positions.size() * 3);
  normals.reserve(mesh.normals.size() * 3);
  for (const Vec3& p : mesh.positions) positions.insert(positions.end(), {p.x, p.y, p.z});
  for (const Vec3& n : mesh.normals) normals.insert(normals.end(), {n.x, n.y, n.z});
  for (const auto& t : mesh.triangles) triangles.insert(triangles.end(), t.begin(), t.end());
  for (const auto& e : mesh.edges) edges.insert(edges.end(), e.begin(), e.end());
  w.open("mesh", '{');
  w.packed("positions", positions, format_json_number);
  w.packed("normals", normals, format_json_number);
  w.packed("triangles", triangles, format_index);
  w.packed("edges", edges, format_index);
  w.close('}');
}

void write_light(Writer& w, const Light& light) {
  w.open("", '{');
  w.string("kind", to_string(light.kind));
  w.vec3("position", light.position);
  if (light.kind != LightKind::Point) w.vec3("direction", light.direction);
  if (light.kind == LightKind::Spot) {
    w.number("cutoff_deg", light.cutoff_deg);
    w.number("exponent", light.exponent);
  }
  w.vec3("ambient", light.ambient);
  w.vec3("diffuse", light.diffuse);
  w.vec3("specular", light.specular);
  w.close('}');
}

// ---- reading ------------------------------------------------------------------

const json& member(const json& object, const char* key) {
  if (!object.is_object()) throw DocumentError(std::string("expected an object holding '") + key + "'");
  auto it = object.find(key);
  if (it == object.end()) throw DocumentError(std::string("missing key '") + key + "'");
  return *it;
}

double read_number(const json& value, const char* what) {
  if (!value.is_number()) throw DocumentError(std::string(what) + " must be a number");
  return value.get<double>();
}

double read_number(const json& object, const char* key, double fallback) {
  auto it = object.find(key);
  return it == object.end() ? fallback : read_number(*it, key);
}

std::vector<double> read_numbers(const json& value, const char* what) {
  if (!value.is_array()) throw DocumentError(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(value.size());
  for (const json& element : value) out.push_back(read_number(element, what));
  return out;
}

Vec3 read_vec3(const json& value, const char* what) {
  auto numbers = read_numbers(value, what);
  if (numbers.size() != 3) throw DocumentError(std::string(what) + " must hold 3 numbers");
  return {numbers[0], numbers[1], numbers[2]};
}

Vec3 read_vec3(const json& object, const char* key, const Vec3& fallback) {
  auto it = object.find(key);
  return it == object.end() ? fallback : read_vec3(*it, key);
}

std::string read_string(const json& value, const char* what) {
  if (!value.is_string()) throw DocumentError(std::string(what) + " must be a string");
  return value.get<std::string>();
}

std::vector<Vec3> read_vec3_list(const json& value, const char* what) {
  auto flat = read_numbers(value, what);
  if (flat.size() % 3 != 0) throw DocumentError(std::string(what) + " length must be a multiple of 3");
  std::vector<Vec3> out(flat.size() / 3);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {flat[3 * i], flat[3 * i + 1], flat[3 * i + 2]};
  return out;
}

template <std::size_t N>
std::vector<std::array<std::uint32_t, N>> read_index_list(const json& value, const char* what) {
  if (!value.is_array() || value.size() % N != 0) {
    throw DocumentError(std::string(what) + " must be an array with a multiple of " + std::to_string(N) + " entries");
  }
  std::vector<std::array<std::uint32_t, N>> out(value.size() / N);
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_number_unsigned() && !(value[i].is_number_integer() && value[i].get<std::int64_t>() >= 0)) {
      throw DocumentError(std::string(what) + " entries must be non-negative integers");
    }
    out[i / N][i % N] = value[i].get<std::uint32_t>();
  }
  return out;
}

SourceKind read_source_kind(const std::string& text) {
  for (SourceKind kind : {SourceKind::Cube, SourceKind::Cone, SourceKind::Sphere, SourceKind::Cylinder,
                          SourceKind::Grid, SourceKind::Obj}) {
    if (to_string(kind) == text) return kind;
  }
  throw DocumentError("unknown source_kind '" + text + "'");
}

LightKind read_light_kind(const std::string& text) {
  for (LightKind kind : {LightKind::Point, LightKind::Directional, LightKind::Spot}) {
    if (to_string(kind) == text) return kind;
  }
  throw DocumentError("unknown light kind '" + text + "'");
}

Material read_material(const json& value) {
  Material m;
  m.ambient = read_vec3(member(value, "ambient"), "ambient");
  m.diffuse = read_vec3(member(value, "diffuse"), "diffuse");
  m.specular = read_vec3(member(value, "specular"), "specular");
  m.shininess = read_number(member(value, "shininess"), "shininess");
  return m;
}

Mesh read_mesh(const json& value) {
  Mesh mesh;
  mesh.positions = read_vec3_list(member(value, "positions"), "positions");
  mesh.normals = read_vec3_list(member(value, "normals"), "normals");
  mesh.triangles = read_index_list<3>(member(value, "triangles"), "triangles");
  mesh.edges = read_index_list<2>(member(value, "edges"), "edges");
  if (auto problem = validate(mesh)) throw DocumentError("invalid mesh: " + *problem);
  return mesh;
}

}  // namespace

std::string format_json_number(double value) {
  if (!std::isfinite(value)) throw DocumentError("scene documents hold finite numbers only");
  if (value == 0) return "0";
  char buffer[32];
  auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

std::string quote_json(std::string_view text) { return json(std::string(text)).dump(); }

std::string serialize_scene(const Scene& scene) {
  Writer w;
  w.open("", '{');
  w.open("camera", '{');
  w.vec3("eye", scene.camera.eye);
  w.vec3("target", scene.camera.target);
  w.vec3("up", scene.camera.up);
  w.number("fov_y_deg", scene.camera.fov_y_deg);
  w.number("near", scene.camera.near_plane);
  w.number("far", scene.camera.far_plane);
  w.close('}');
  w.string("shading", to_string(scene.shading));
  w.vec3("clear_color", scene.clear_color);
  w.open("objects", '[');
  for (const SceneObject& object : scene.objects) {
    w.open("", '{');
    w.raw("id", std::to_string(object.id));
    w.string("source_kind", to_string(object.source_kind));
    if (object.source_kind == SourceKind::Obj) w.string("source_name", object.source_name);
    w.string("display_mode", to_string(object.display_mode));
    w.packed("model_matrix", object.model_matrix.m, format_json_number);
    write_material(w, object.material);
    write_mesh(w, *object.mesh);
    w.close('}');
  }
  w.close(']');
  w.open("lights", '[');
  for (const Light& light : scene.lights) write_light(w, light);
  w.close(']');
  w.close('}');
  std::string text = w.take();
  text += '\n';
  return text;
}

Scene parse_scene_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  Scene scene;
  const json& camera = member(root, "camera");
  scene.camera.eye = read_vec3(member(camera, "eye"), "eye");
  scene.camera.target = read_vec3(member(camera, "target"), "target");
  scene.camera.up = read_vec3(member(camera, "up"), "up");
  scene.camera.fov_y_deg = read_number(member(camera, "fov_y_deg"), "fov_y_deg");
  scene.camera.near_plane = read_number(member(camera, "near"), "near");
  scene.camera.far_plane = read_number(member(camera, "far"), "far");

  auto shading = parse_shading_model(read_string(member(root, "shading"), "shading"));
  if (!shading) throw DocumentError("unknown shading model");
  scene.shading = *shading;
  scene.clear_color = read_vec3(member(root, "clear_color"), "clear_color");

  const json& objects = member(root, "objects");
  if (!objects.is_array()) throw DocumentError("objects must be an array");
  for (const json& entry : objects) {
    SceneObject object;
    object.id = static_cast<std::size_t>(read_number(member(entry, "id"), "id"));
    if (object.id != scene.objects.size()) throw DocumentError("object ids must count up from 0");
    object.source_kind = read_source_kind(read_string(member(entry, "source_kind"), "source_kind"));
    if (object.source_kind == SourceKind::Obj) {
      object.source_name = read_string(member(entry, "source_name"), "source_name");
    }
    auto mode = parse_display_mode(read_string(member(entry, "display_mode"), "display_mode"));
    if (!mode) throw DocumentError("unknown display mode");
    object.display_mode = *mode;
    auto matrix = read_numbers(member(entry, "model_matrix"), "model_matrix");
    if (matrix.size() != 16) throw DocumentError("model_matrix must hold 16 numbers");
    std::copy(matrix.begin(), matrix.end(), object.model_matrix.m.begin());
    object.material = read_material(member(entry, "material"));
    object.mesh = std::make_shared<const Mesh>(read_mesh(member(entry, "mesh")));
    scene.objects.push_back(std::move(object));
  }

  const json& lights = member(root, "lights");
  if (!lights.is_array()) throw DocumentError("lights must be an array");
  for (const json& entry : lights) {
    Light light;
    light.kind = read_light_kind(read_string(member(entry, "kind"), "kind"));
    light.position = read_vec3(member(entry, "position"), "position");
    light.direction = read_vec3(entry, "direction", Vec3{});
    light.cutoff_deg = read_number(entry, "cutoff_deg", 0);
    light.exponent = read_number(entry, "exponent", 0);
    light.ambient = read_vec3(member(entry, "ambient"), "ambient");
    light.diffuse = read_vec3(member(entry, "diffuse"), "diffuse");
    light.specular = read_vec3(member(entry, "specular"), "specular");
    scene.lights.push_back(light);
  }
  return scene;
}

}  // namespace luagfx
