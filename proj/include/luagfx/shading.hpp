#pragma once

#include <array>
#include <span>

#include "luagfx/scene.hpp"

namespace luagfx {

/// A surface sample in world space. `normal` and `view_dir` (surface to eye) are unit vectors.
struct ShadePoint {
  Vec3 position;
  Vec3 normal;
  Vec3 view_dir;
};

enum class SpecularVariant { Blinn, Phong };

/// Flat and Gouraud use the reflection-vector specular; only BlinnPhong uses the halfway vector.
SpecularVariant specular_variant(ShadingModel model);

/// Unit vector from the surface toward the light.
Vec3 light_vector(const Light& light, const Vec3& position);

/// Cone attenuation of a spot light at `position`; 1 for other kinds.
double spot_factor(const Light& light, const Vec3& position);

/// Ambient + diffuse + specular summed over `lights`, before clamping.
Vec3 illuminate_unclamped(const ShadePoint& p, const Material& m, std::span<const Light> lights,
                          SpecularVariant variant);

/// Phong illumination clamped to [0, 1] per channel.
Vec3 illuminate(const ShadePoint& p, const Material& m, std::span<const Light> lights, SpecularVariant variant);

struct ShadedVertex {
  Vec3 position;  // world space
  Vec3 normal;    // world space, unit
};

/// Per-triangle color rule for one shading model. Weights passed to color_at are
/// world-space barycentric coordinates (perspective already undone) and sum to 1.
class TriangleShader {
 public:
  TriangleShader(const std::array<ShadedVertex, 3>& vertices, ShadingModel model, const Material& material,
                 std::span<const Light> lights, const Vec3& eye);

  Vec3 color_at(double w0, double w1, double w2) const;

  /// Normal used for the fragment at the given weights (BlinnPhong re-normalizes).
  Vec3 normal_at(double w0, double w1, double w2) const;

  ShadingModel model() const { return model_; }

 private:
  std::array<ShadedVertex, 3> vertices_;
  ShadingModel model_;
  const Material* material_;
  std::span<const Light> lights_;
  Vec3 eye_;
  Vec3 face_normal_;
  std::array<Vec3, 3> vertex_colors_{};  // Gouraud
  Vec3 flat_color_;
};

}  // namespace luagfx
