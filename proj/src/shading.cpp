#include "luagfx/shading.hpp"

#include <cmath>
#include <numbers>

namespace luagfx {

SpecularVariant specular_variant(ShadingModel model) {
  return model == ShadingModel::BlinnPhong ? SpecularVariant::Blinn : SpecularVariant::Phong;
}

Vec3 light_vector(const Light& light, const Vec3& position) {
  if (light.kind == LightKind::Directional) return -light.direction;
  return normalize(light.position - position);
}

double spot_factor(const Light& light, const Vec3& position) {
  if (light.kind != LightKind::Spot) return 1.0;
  double alignment = dot(normalize(position - light.position), light.direction);
  double cos_cutoff = std::cos(light.cutoff_deg * std::numbers::pi / 180.0);
  if (alignment < cos_cutoff) return 0.0;
  return std::pow(std::max(alignment, 0.0), light.exponent);
}

Vec3 illuminate_unclamped(const ShadePoint& p, const Material& m, std::span<const Light> lights,
                          SpecularVariant variant) {
  Vec3 color;
  for (const Light& light : lights) {
    color += hadamard(m.ambient, light.ambient);
    Vec3 to_light = light_vector(light, p.position);
    double lambert = dot(p.normal, to_light);
    if (lambert <= 0) continue;  // no two-sided lighting
    double specular;
    if (variant == SpecularVariant::Blinn) {
      Vec3 halfway = normalize(to_light + p.view_dir);
      specular = std::pow(std::max(dot(p.normal, halfway), 0.0), m.shininess);
    } else {
      Vec3 reflected = p.normal * (2 * lambert) - to_light;
      specular = std::pow(std::max(dot(reflected, p.view_dir), 0.0), m.shininess);
    }
    double factor = spot_factor(light, p.position);
    color += factor * (hadamard(m.diffuse, light.diffuse) * lambert + hadamard(m.specular, light.specular) * specular);
  }
  return color;
}

Vec3 illuminate(const ShadePoint& p, const Material& m, std::span<const Light> lights, SpecularVariant variant) {
  return clamp01(illuminate_unclamped(p, m, lights, variant));
}

TriangleShader::TriangleShader(const std::array<ShadedVertex, 3>& vertices, ShadingModel model,
                               const Material& material, std::span<const Light> lights, const Vec3& eye)
    : vertices_(vertices), model_(model), material_(&material), lights_(lights), eye_(eye) {
  Vec3 geometric = cross(vertices[1].position - vertices[0].position, vertices[2].position - vertices[0].position);
  face_normal_ = length(geometric) > 0 ? normalize(geometric)
                                       : normalize(vertices[0].normal + vertices[1].normal + vertices[2].normal);
  const SpecularVariant variant = specular_variant(model);
  auto shade = [&](const Vec3& position, const Vec3& normal) {
    return illuminate({position, normal, normalize(eye_ - position)}, *material_, lights_, variant);
  };
  switch (model) {
    case ShadingModel::Flat: {
      Vec3 centroid = (vertices[0].position + vertices[1].position + vertices[2].position) / 3.0;
      flat_color_ = shade(centroid, face_normal_);
      break;
    }
    case ShadingModel::Gouraud:
      for (int k = 0; k < 3; ++k) vertex_colors_[k] = shade(vertices[k].position, vertices[k].normal);
      break;
    case ShadingModel::BlinnPhong:
      break;
  }
}

Vec3 TriangleShader::normal_at(double w0, double w1, double w2) const {
  if (model_ == ShadingModel::Flat) return face_normal_;
  Vec3 n = vertices_[0].normal * w0 + vertices_[1].normal * w1 + vertices_[2].normal * w2;
  return length(n) > 0 ? normalize(n) : face_normal_;
}

Vec3 TriangleShader::color_at(double w0, double w1, double w2) const {
  switch (model_) {
    case ShadingModel::Flat:
      return flat_color_;
    case ShadingModel::Gouraud:
      return clamp01(vertex_colors_[0] * w0 + vertex_colors_[1] * w1 + vertex_colors_[2] * w2);
    case ShadingModel::BlinnPhong:
      break;
  }
  Vec3 position = vertices_[0].position * w0 + vertices_[1].position * w1 + vertices_[2].position * w2;
  ShadePoint p{position, normal_at(w0, w1, w2), normalize(eye_ - position)};
  return illuminate(p, *material_, lights_, SpecularVariant::Blinn);
}

}  // namespace luagfx
