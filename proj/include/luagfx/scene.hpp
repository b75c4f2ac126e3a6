#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "luagfx/math.hpp"
#include "luagfx/mesh.hpp"

namespace luagfx {

enum class DisplayMode { Triangles, Points, Lines };
enum class ShadingModel { Flat, Gouraud, BlinnPhong };
enum class SourceKind { Cube, Cone, Sphere, Cylinder, Grid, Obj };
enum class LightKind { Point, Directional, Spot };
enum class Component { Ambient, Diffuse, Specular };

std::optional<DisplayMode> parse_display_mode(std::string_view text);
std::optional<ShadingModel> parse_shading_model(std::string_view text);
std::string_view to_string(DisplayMode mode);
std::string_view to_string(ShadingModel model);
std::string_view to_string(SourceKind kind);
std::string_view to_string(LightKind kind);

struct Material {
  Vec3 ambient;
  Vec3 diffuse;
  Vec3 specular;
  double shininess = 32;

  bool operator==(const Material&) const = default;
};

struct Light {
  LightKind kind = LightKind::Point;
  Vec3 position;
  Vec3 direction;         // unit; Directional and Spot only
  double cutoff_deg = 0;  // Spot only, in (0, 90]
  double exponent = 0;    // Spot only
  Vec3 ambient;
  Vec3 diffuse;
  Vec3 specular;

  bool operator==(const Light&) const = default;
};

struct Camera {
  Vec3 eye;
  Vec3 target;
  Vec3 up;
  double fov_y_deg = 45;
  double near_plane = 0.1;
  double far_plane = 100;

  bool operator==(const Camera&) const = default;
};

struct SceneObject {
  std::size_t id = 0;
  std::shared_ptr<const Mesh> mesh;
  Mat4 model_matrix = Mat4::identity();
  Material material;
  DisplayMode display_mode = DisplayMode::Triangles;
  SourceKind source_kind = SourceKind::Cube;
  std::string source_name;  // asset name for Obj, empty otherwise

  bool operator==(const SceneObject& other) const;
};

/// Everything a renderer needs. Produced once by SceneBuilder::freeze and never mutated.
struct Scene {
  Camera camera;
  ShadingModel shading = ShadingModel::BlinnPhong;
  std::vector<SceneObject> objects;
  std::vector<Light> lights;
  Vec3 clear_color;

  bool operator==(const Scene&) const = default;
  std::size_t triangle_count() const;
};

namespace defaults {
inline constexpr Vec3 kCameraEye{3, 3, 5};
inline constexpr Vec3 kCameraTarget{0, 0, 0};
inline constexpr Vec3 kCameraUp{0, 1, 0};
inline constexpr double kFovYDeg = 45;
inline constexpr double kNear = 0.1;
inline constexpr double kFar = 100;
inline constexpr Vec3 kClearColor{0.15, 0.15, 0.15};

inline constexpr Vec3 kMaterialAmbient{0.1, 0.1, 0.1};
inline constexpr Vec3 kMaterialDiffuse{0.7, 0.7, 0.7};
inline constexpr Vec3 kMaterialSpecular{0.3, 0.3, 0.3};
inline constexpr double kShininess = 32;

inline constexpr Vec3 kLightAmbient{0.1, 0.1, 0.1};
inline constexpr Vec3 kLightDiffuse{1, 1, 1};
inline constexpr Vec3 kLightSpecular{1, 1, 1};

Camera camera();
Material material();
}  // namespace defaults

/// The light used when a scene declares none: directional, from the eye along the view direction.
Light default_headlight(const Camera& camera);

/// Shared canonical mesh for a primitive kind (not Obj).
std::shared_ptr<const Mesh> primitive_mesh(SourceKind kind);

/// Raised for invalid graphics calls; the interpreter attaches the call's line.
class SceneError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mutable scene under construction. Draw calls append an entity and make it current;
/// transforms and component setters act on the current entity.
class SceneBuilder {
 public:
  SceneBuilder();

  void draw_primitive(SourceKind kind, std::string_view display_mode);
  void draw_mesh(std::string_view display_mode, std::shared_ptr<const Mesh> mesh, std::string asset_name);

  void translate(const Vec3& offset);
  void rotate(double degrees, const Vec3& axis);
  void scale(const Vec3& factors);

  void add_point_light(const Vec3& position);
  void add_directional_light(const Vec3& position, const Vec3& direction);
  void add_spot_light(const Vec3& position, const Vec3& direction, double cutoff_deg, double exponent);

  void change_lighting(std::string_view model);
  /// Components are clamped to [0, 1].
  void set_component(Component which, const Vec3& rgb);

  /// Hands over the finished scene. A builder can be frozen once.
  Scene freeze();
  bool frozen() const { return frozen_; }

  const Scene& peek() const { return scene_; }

 private:
  enum class Cursor { None, Object, Light };

  void require_open() const;
  DisplayMode mode_or_throw(std::string_view text) const;
  SceneObject& current_object(const char* operation);
  void append_object(SceneObject object);
  void append_light(Light light);

  Scene scene_;
  Cursor cursor_ = Cursor::None;
  bool frozen_ = false;
};

}  // namespace luagfx
