#include "luagfx/scene.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace luagfx {
namespace {

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

void require_finite(const Vec3& v, const char* what) {
  if (!is_finite(v)) throw SceneError(std::string(what) + " must be finite");
}

}  // namespace

std::optional<DisplayMode> parse_display_mode(std::string_view text) {
  std::string mode = lowercase(text);
  if (mode == "triangles") return DisplayMode::Triangles;
  if (mode == "points") return DisplayMode::Points;
  if (mode == "lines") return DisplayMode::Lines;
  return std::nullopt;
}

std::optional<ShadingModel> parse_shading_model(std::string_view text) {
  std::string model = lowercase(text);
  if (model == "flat") return ShadingModel::Flat;
  if (model == "gouraud") return ShadingModel::Gouraud;
  if (model == "blinn-phong") return ShadingModel::BlinnPhong;
  return std::nullopt;
}

std::string_view to_string(DisplayMode mode) {
  switch (mode) {
    case DisplayMode::Triangles: return "triangles";
    case DisplayMode::Points: return "points";
    case DisplayMode::Lines: return "lines";
  }
  return "";
}

std::string_view to_string(ShadingModel model) {
  switch (model) {
    case ShadingModel::Flat: return "flat";
    case ShadingModel::Gouraud: return "gouraud";
    case ShadingModel::BlinnPhong: return "blinn-phong";
  }
  return "";
}

std::string_view to_string(SourceKind kind) {
  switch (kind) {
    case SourceKind::Cube: return "cube";
    case SourceKind::Cone: return "cone";
    case SourceKind::Sphere: return "sphere";
    case SourceKind::Cylinder: return "cylinder";
    case SourceKind::Grid: return "grid";
    case SourceKind::Obj: return "obj";
  }
  return "";
}

std::string_view to_string(LightKind kind) {
  switch (kind) {
    case LightKind::Point: return "point";
    case LightKind::Directional: return "directional";
    case LightKind::Spot: return "spot";
  }
  return "";
}

bool SceneObject::operator==(const SceneObject& other) const {
  bool same_mesh = mesh == other.mesh || (mesh && other.mesh && *mesh == *other.mesh);
  return id == other.id && same_mesh && model_matrix == other.model_matrix && material == other.material &&
         display_mode == other.display_mode && source_kind == other.source_kind && source_name == other.source_name;
}

std::size_t Scene::triangle_count() const {
  std::size_t total = 0;
  for (const auto& object : objects) total += object.mesh->triangles.size();
  return total;
}

Camera defaults::camera() {
  return Camera{kCameraEye, kCameraTarget, kCameraUp, kFovYDeg, kNear, kFar};
}

Material defaults::material() {
  return Material{kMaterialAmbient, kMaterialDiffuse, kMaterialSpecular, kShininess};
}

Light default_headlight(const Camera& camera) {
  Light light;
  light.kind = LightKind::Directional;
  light.position = camera.eye;
  light.direction = normalize(camera.target - camera.eye);
  light.ambient = defaults::kLightAmbient;
  light.diffuse = defaults::kLightDiffuse;
  light.specular = defaults::kLightSpecular;
  return light;
}

std::shared_ptr<const Mesh> primitive_mesh(SourceKind kind) {
  static const auto cube = std::make_shared<const Mesh>(gen_cube());
  static const auto cone = std::make_shared<const Mesh>(gen_cone());
  static const auto sphere = std::make_shared<const Mesh>(gen_sphere());
  static const auto cylinder = std::make_shared<const Mesh>(gen_cylinder());
  static const auto grid = std::make_shared<const Mesh>(gen_grid());
  switch (kind) {
    case SourceKind::Cube: return cube;
    case SourceKind::Cone: return cone;
    case SourceKind::Sphere: return sphere;
    case SourceKind::Cylinder: return cylinder;
    case SourceKind::Grid: return grid;
    case SourceKind::Obj: break;
  }
  throw std::invalid_argument("OBJ models have no canonical mesh");
}

SceneBuilder::SceneBuilder() {
  scene_.camera = defaults::camera();
  scene_.clear_color = defaults::kClearColor;
}

void SceneBuilder::require_open() const {
  if (frozen_) throw SceneError("scene is already frozen");
}

DisplayMode SceneBuilder::mode_or_throw(std::string_view text) const {
  auto mode = parse_display_mode(text);
  if (!mode) throw SceneError("unknown display mode '" + std::string(text) + "'");
  return *mode;
}

void SceneBuilder::append_object(SceneObject object) {
  object.id = scene_.objects.size();
  object.material = defaults::material();
  scene_.objects.push_back(std::move(object));
  cursor_ = Cursor::Object;
}

void SceneBuilder::append_light(Light light) {
  light.ambient = defaults::kLightAmbient;
  light.diffuse = defaults::kLightDiffuse;
  light.specular = defaults::kLightSpecular;
  scene_.lights.push_back(light);
  cursor_ = Cursor::Light;
}

void SceneBuilder::draw_primitive(SourceKind kind, std::string_view display_mode) {
  require_open();
  SceneObject object;
  object.display_mode = mode_or_throw(display_mode);
  object.mesh = primitive_mesh(kind);
  object.source_kind = kind;
  append_object(std::move(object));
}

void SceneBuilder::draw_mesh(std::string_view display_mode, std::shared_ptr<const Mesh> mesh, std::string asset_name) {
  require_open();
  SceneObject object;
  object.display_mode = mode_or_throw(display_mode);
  object.mesh = std::move(mesh);
  object.source_kind = SourceKind::Obj;
  object.source_name = std::move(asset_name);
  append_object(std::move(object));
}

SceneObject& SceneBuilder::current_object(const char* operation) {
  require_open();
  if (cursor_ != Cursor::Object) {
    throw SceneError(std::string("no current object for ") + operation);
  }
  return scene_.objects.back();
}

void SceneBuilder::translate(const Vec3& offset) {
  SceneObject& object = current_object("TranslateObject");
  require_finite(offset, "translation");
  object.model_matrix = object.model_matrix * translation(offset);
}

void SceneBuilder::rotate(double degrees, const Vec3& axis) {
  SceneObject& object = current_object("RotateObject");
  require_finite(axis, "rotation axis");
  if (!std::isfinite(degrees)) throw SceneError("rotation angle must be finite");
  if (length(axis) == 0) throw SceneError("rotation axis must be non-zero");
  object.model_matrix = object.model_matrix * rotation(degrees, axis);
}

void SceneBuilder::scale(const Vec3& factors) {
  SceneObject& object = current_object("ScaleObject");
  require_finite(factors, "scale");
  if (factors.x == 0 || factors.y == 0 || factors.z == 0) throw SceneError("scale components must be non-zero");
  object.model_matrix = object.model_matrix * scaling(factors);
}

void SceneBuilder::add_point_light(const Vec3& position) {
  require_open();
  require_finite(position, "light position");
  Light light;
  light.kind = LightKind::Point;
  light.position = position;
  append_light(light);
}

void SceneBuilder::add_directional_light(const Vec3& position, const Vec3& direction) {
  require_open();
  require_finite(position, "light position");
  require_finite(direction, "light direction");
  if (length(direction) == 0) throw SceneError("light direction must be non-zero");
  Light light;
  light.kind = LightKind::Directional;
  light.position = position;
  light.direction = normalize(direction);
  append_light(light);
}

void SceneBuilder::add_spot_light(const Vec3& position, const Vec3& direction, double cutoff_deg, double exponent) {
  require_open();
  require_finite(position, "light position");
  require_finite(direction, "light direction");
  if (length(direction) == 0) throw SceneError("light direction must be non-zero");
  if (!(cutoff_deg > 0 && cutoff_deg <= 90)) throw SceneError("spot cutoff must be in (0, 90] degrees");
  if (!(exponent >= 0) || !std::isfinite(exponent)) throw SceneError("spot exponent must be >= 0");
  Light light;
  light.kind = LightKind::Spot;
  light.position = position;
  light.direction = normalize(direction);
  light.cutoff_deg = cutoff_deg;
  light.exponent = exponent;
  append_light(light);
}

void SceneBuilder::change_lighting(std::string_view model) {
  require_open();
  auto parsed = parse_shading_model(model);
  if (!parsed) throw SceneError("unknown shading model '" + std::string(model) + "'");
  scene_.shading = *parsed;
}

void SceneBuilder::set_component(Component which, const Vec3& rgb) {
  require_open();
  if (!is_finite(rgb)) throw SceneError("color must be finite");
  Vec3 color = clamp01(rgb);
  auto assign = [&](Vec3& ambient, Vec3& diffuse, Vec3& specular) {
    switch (which) {
      case Component::Ambient: ambient = color; break;
      case Component::Diffuse: diffuse = color; break;
      case Component::Specular: specular = color; break;
    }
  };
  if (cursor_ == Cursor::Object) {
    Material& m = scene_.objects.back().material;
    assign(m.ambient, m.diffuse, m.specular);
  } else if (cursor_ == Cursor::Light) {
    Light& l = scene_.lights.back();
    assign(l.ambient, l.diffuse, l.specular);
  } else {
    throw SceneError("no current entity");
  }
}

Scene SceneBuilder::freeze() {
  require_open();
  frozen_ = true;
  return std::move(scene_);
}

}  // namespace luagfx
