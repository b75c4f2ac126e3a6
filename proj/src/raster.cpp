#include "luagfx/raster.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <thread>

#include "luagfx/shading.hpp"

namespace luagfx {

Framebuffer::Framebuffer(int w, int h, const Rgb8& clear) : width(w), height(h) {
  if (w < 1 || h < 1) throw std::invalid_argument("framebuffer dimensions must be >= 1");
  color.resize(static_cast<std::size_t>(w) * h * 3);
  for (std::size_t i = 0; i < color.size(); i += 3) {
    color[i] = clear[0];
    color[i + 1] = clear[1];
    color[i + 2] = clear[2];
  }
  depth.assign(static_cast<std::size_t>(w) * h, std::numeric_limits<float>::infinity());
}

Rgb8 Framebuffer::pixel(int x, int y) const {
  std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
  return {color[i], color[i + 1], color[i + 2]};
}

void Framebuffer::set_pixel(int x, int y, const Rgb8& rgb) {
  std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
  color[i] = rgb[0];
  color[i + 1] = rgb[1];
  color[i + 2] = rgb[2];
}

Rgb8 to_rgb8(const Vec3& color) {
  Vec3 c = clamp01(color);
  auto q = [](double v) { return static_cast<std::uint8_t>(std::lround(v * 255.0)); };
  return {q(c.x), q(c.y), q(c.z)};
}

namespace {

struct ClipVertex {
  Vec4 clip;
  std::array<double, 3> weights;  // barycentric weights relative to the source triangle
};

struct ScreenVertex {
  double x, y;      // pixel coordinates, y down
  double depth;     // [0, 1] at near/far
  double inv_w;
  std::array<double, 3> weights;
};

// Triangle ready for scan conversion; weights are relative to `source`.
struct SetupTriangle {
  std::array<ScreenVertex, 3> v;
  double area;
  std::size_t shader;  // index into the object's shader list
  int min_x, max_x, min_y, max_y;
};

struct Segment {
  ScreenVertex a, b;
  Vec3 color_a, color_b;
};

struct Dot {
  int x, y;
  float depth;
  Rgb8 color;
};

ScreenVertex to_screen(const ClipVertex& cv, int width, int height) {
  double inv_w = 1.0 / cv.clip.w;
  double ndc_x = cv.clip.x * inv_w;
  double ndc_y = cv.clip.y * inv_w;
  double ndc_z = cv.clip.z * inv_w;
  return {(ndc_x + 1.0) * 0.5 * width, (1.0 - ndc_y) * 0.5 * height, ndc_z * 0.5 + 0.5, inv_w, cv.weights};
}

double near_distance(const Vec4& c) { return c.z + c.w; }  // >= 0 in front of the near plane

ClipVertex lerp(const ClipVertex& a, const ClipVertex& b, double t) {
  ClipVertex out;
  out.clip = {a.clip.x + (b.clip.x - a.clip.x) * t, a.clip.y + (b.clip.y - a.clip.y) * t,
              a.clip.z + (b.clip.z - a.clip.z) * t, a.clip.w + (b.clip.w - a.clip.w) * t};
  for (int k = 0; k < 3; ++k) out.weights[k] = a.weights[k] + (b.weights[k] - a.weights[k]) * t;
  return out;
}

// Sutherland-Hodgman against the near plane only.
std::vector<ClipVertex> clip_near(const std::array<ClipVertex, 3>& tri) {
  std::vector<ClipVertex> out;
  for (int k = 0; k < 3; ++k) {
    const ClipVertex& cur = tri[k];
    const ClipVertex& next = tri[(k + 1) % 3];
    double dc = near_distance(cur.clip);
    double dn = near_distance(next.clip);
    if (dc >= 0) out.push_back(cur);
    if ((dc >= 0) != (dn >= 0)) out.push_back(lerp(cur, next, dc / (dc - dn)));
  }
  return out;
}

double edge(const ScreenVertex& a, const ScreenVertex& b, double px, double py) {
  return (b.x - a.x) * (py - a.y) - (b.y - a.y) * (px - a.x);
}

// Edges owned by a clockwise (y-down) triangle under the top-left rule.
bool is_top_left(const ScreenVertex& a, const ScreenVertex& b) {
  double dx = b.x - a.x;
  double dy = b.y - a.y;
  return (dy == 0 && dx > 0) || dy < 0;
}

std::optional<SetupTriangle> setup(std::array<ScreenVertex, 3> v, std::size_t shader, int width, int height) {
  double area = edge(v[0], v[1], v[2].x, v[2].y);
  if (!(area != 0) || !std::isfinite(area)) return std::nullopt;
  if (area < 0) {
    std::swap(v[1], v[2]);
    area = -area;
  }
  double lo_x = std::min({v[0].x, v[1].x, v[2].x});
  double hi_x = std::max({v[0].x, v[1].x, v[2].x});
  double lo_y = std::min({v[0].y, v[1].y, v[2].y});
  double hi_y = std::max({v[0].y, v[1].y, v[2].y});
  SetupTriangle t{v, area, shader, 0, 0, 0, 0};
  t.min_x = std::max(0, static_cast<int>(std::ceil(lo_x - 0.5)));
  t.max_x = std::min(width - 1, static_cast<int>(std::floor(hi_x - 0.5)));
  t.min_y = std::max(0, static_cast<int>(std::ceil(lo_y - 0.5)));
  t.max_y = std::min(height - 1, static_cast<int>(std::floor(hi_y - 0.5)));
  if (t.min_x > t.max_x || t.min_y > t.max_y) return std::nullopt;
  return t;
}

class Rasterizer {
 public:
  Rasterizer(Framebuffer& fb, int row_begin, int row_end) : fb_(fb), row_begin_(row_begin), row_end_(row_end) {}

  void triangle(const SetupTriangle& t, const TriangleShader& shader) {
    const auto& v = t.v;
    bool owns0 = is_top_left(v[1], v[2]);
    bool owns1 = is_top_left(v[2], v[0]);
    bool owns2 = is_top_left(v[0], v[1]);
    int y0 = std::max(t.min_y, row_begin_);
    int y1 = std::min(t.max_y, row_end_ - 1);
    for (int y = y0; y <= y1; ++y) {
      double py = y + 0.5;
      for (int x = t.min_x; x <= t.max_x; ++x) {
        double px = x + 0.5;
        double e0 = edge(v[1], v[2], px, py);
        double e1 = edge(v[2], v[0], px, py);
        double e2 = edge(v[0], v[1], px, py);
        if (e0 < 0 || e1 < 0 || e2 < 0) continue;
        if ((e0 == 0 && !owns0) || (e1 == 0 && !owns1) || (e2 == 0 && !owns2)) continue;
        double l0 = e0 / t.area, l1 = e1 / t.area, l2 = e2 / t.area;
        float depth = static_cast<float>(l0 * v[0].depth + l1 * v[1].depth + l2 * v[2].depth);
        std::size_t index = static_cast<std::size_t>(y) * fb_.width + x;
        if (!(depth < fb_.depth[index])) continue;
        // perspective-correct weights relative to the source triangle
        double p0 = l0 * v[0].inv_w, p1 = l1 * v[1].inv_w, p2 = l2 * v[2].inv_w;
        double norm = p0 + p1 + p2;
        std::array<double, 3> w{};
        for (int k = 0; k < 3; ++k) w[k] = (p0 * v[0].weights[k] + p1 * v[1].weights[k] + p2 * v[2].weights[k]) / norm;
        fb_.depth[index] = depth;
        fb_.set_pixel(x, y, to_rgb8(shader.color_at(w[0], w[1], w[2])));
      }
    }
  }

  void segment(const Segment& s) {
    int x0 = static_cast<int>(std::floor(s.a.x)), y0 = static_cast<int>(std::floor(s.a.y));
    int x1 = static_cast<int>(std::floor(s.b.x)), y1 = static_cast<int>(std::floor(s.b.y));
    int dx = std::abs(x1 - x0), dy = -std::abs(y1 - y0);
    int sx = x0 < x1 ? 1 : -1, sy = y0 < y1 ? 1 : -1;
    int steps = std::max(dx, -dy);
    int err = dx + dy;
    int x = x0, y = y0;
    for (int i = 0;; ++i) {
      double t = steps == 0 ? 0.0 : static_cast<double>(i) / steps;
      plot(x, y, static_cast<float>(s.a.depth + (s.b.depth - s.a.depth) * t),
           s.color_a + (s.color_b - s.color_a) * t);
      if (x == x1 && y == y1) break;
      int e2 = 2 * err;
      if (e2 >= dy) {
        err += dy;
        x += sx;
      }
      if (e2 <= dx) {
        err += dx;
        y += sy;
      }
    }
  }

  void dot(const Dot& d) { plot(d.x, d.y, d.depth, d.color); }

 private:
  void plot(int x, int y, float depth, const Vec3& color) { plot(x, y, depth, to_rgb8(color)); }

  void plot(int x, int y, float depth, const Rgb8& color) {
    if (x < 0 || x >= fb_.width || y < row_begin_ || y >= row_end_) return;
    std::size_t index = static_cast<std::size_t>(y) * fb_.width + x;
    if (!(depth < fb_.depth[index])) return;
    fb_.depth[index] = depth;
    fb_.set_pixel(x, y, color);
  }

  Framebuffer& fb_;
  int row_begin_;
  int row_end_;
};

struct PreparedObject {
  std::vector<TriangleShader> shaders;
  std::vector<SetupTriangle> triangles;
  std::vector<Segment> segments;
  std::vector<Dot> dots;
};

class SceneRenderer {
 public:
  SceneRenderer(const Scene& scene, int width, int height)
      : scene_(scene), width_(width), height_(height) {
    const Camera& cam = scene.camera;
    if (!is_finite(cam.eye) || !is_finite(cam.target) || length(cam.target - cam.eye) == 0) {
      throw std::invalid_argument("degenerate camera: eye and target coincide");
    }
    if (length(cross(cam.target - cam.eye, cam.up)) == 0) {
      throw std::invalid_argument("degenerate camera: up is parallel to the view direction");
    }
    if (!(cam.near_plane > 0) || !(cam.far_plane > cam.near_plane)) {
      throw std::invalid_argument("camera needs 0 < near < far");
    }
    view_projection_ = perspective(cam.fov_y_deg, static_cast<double>(width) / height, cam.near_plane, cam.far_plane) *
                       look_at(cam.eye, cam.target, cam.up);
    if (scene.lights.empty()) {
      lights_.push_back(default_headlight(cam));
    } else {
      lights_ = scene.lights;
    }
  }

  PreparedObject prepare(const SceneObject& object) const {
    PreparedObject out;
    const Mesh& mesh = *object.mesh;
    const Mat4 mvp = view_projection_ * object.model_matrix;
    const Mat3 normals = normal_matrix(object.model_matrix);
    const std::size_t n = mesh.positions.size();
    std::vector<ShadedVertex> world(n);
    std::vector<Vec4> clip(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec3& p = mesh.positions[i];
      world[i] = {object.model_matrix.transform_point(p), normalize(normals * mesh.normals[i])};
      clip[i] = mvp * Vec4{p.x, p.y, p.z, 1};
    }
    const Vec3 eye = scene_.camera.eye;
    const SpecularVariant variant = specular_variant(scene_.shading);
    auto vertex_color = [&](std::size_t i) {
      return illuminate({world[i].position, world[i].normal, normalize(eye - world[i].position)}, object.material,
                        lights_, variant);
    };

    switch (object.display_mode) {
      case DisplayMode::Triangles:
        out.shaders.reserve(mesh.triangles.size());
        for (const auto& tri : mesh.triangles) {
          std::array<ClipVertex, 3> cv{ClipVertex{clip[tri[0]], {1, 0, 0}}, ClipVertex{clip[tri[1]], {0, 1, 0}},
                                       ClipVertex{clip[tri[2]], {0, 0, 1}}};
          auto polygon = clip_near(cv);
          if (polygon.size() < 3) continue;
          std::size_t shader_index = out.shaders.size();
          bool used = false;
          for (std::size_t k = 1; k + 1 < polygon.size(); ++k) {
            auto t = setup({to_screen(polygon[0], width_, height_), to_screen(polygon[k], width_, height_),
                            to_screen(polygon[k + 1], width_, height_)},
                           shader_index, width_, height_);
            if (!t) continue;
            out.triangles.push_back(*t);
            used = true;
          }
          if (used) {
            out.shaders.emplace_back(std::array<ShadedVertex, 3>{world[tri[0]], world[tri[1]], world[tri[2]]},
                                     scene_.shading, object.material, lights_, eye);
          }
        }
        break;
      case DisplayMode::Lines:
        for (const auto& e : mesh.edges) {
          ClipVertex a{clip[e[0]], {1, 0, 0}}, b{clip[e[1]], {0, 1, 0}};
          double da = near_distance(a.clip), db = near_distance(b.clip);
          if (da < 0 && db < 0) continue;
          if (da < 0) {
            a = lerp(a, b, da / (da - db));
          } else if (db < 0) {
            b = lerp(a, b, da / (da - db));
          }
          Vec3 ca = vertex_color(e[0]), cb = vertex_color(e[1]);
          auto color_at = [&](const ClipVertex& v) { return ca * v.weights[0] + cb * v.weights[1]; };
          out.segments.push_back({to_screen(a, width_, height_), to_screen(b, width_, height_), color_at(a), color_at(b)});
        }
        break;
      case DisplayMode::Points:
        for (std::size_t i = 0; i < n; ++i) {
          if (near_distance(clip[i]) < 0) continue;
          ScreenVertex s = to_screen({clip[i], {1, 0, 0}}, width_, height_);
          if (!std::isfinite(s.x) || !std::isfinite(s.y)) continue;
          double fx = std::floor(s.x), fy = std::floor(s.y);
          if (fx < 0 || fy < 0 || fx >= width_ || fy >= height_) continue;
          out.dots.push_back({static_cast<int>(fx), static_cast<int>(fy), static_cast<float>(s.depth),
                              to_rgb8(vertex_color(i))});
        }
        break;
    }
    return out;
  }

  static void rasterize(const PreparedObject& object, Rasterizer& raster) {
    for (const auto& t : object.triangles) raster.triangle(t, object.shaders[t.shader]);
    for (const auto& s : object.segments) raster.segment(s);
    for (const auto& d : object.dots) raster.dot(d);
  }

 private:
  const Scene& scene_;
  int width_;
  int height_;
  Mat4 view_projection_;
  std::vector<Light> lights_;
};

}  // namespace

Framebuffer render(const Scene& scene, int width, int height, const RenderOptions& options) {
  if (width < 1 || height < 1) throw std::invalid_argument("render size must be >= 1");
  SceneRenderer renderer(scene, width, height);
  Framebuffer fb(width, height, to_rgb8(scene.clear_color));

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(height));
  // Each worker owns a horizontal band and walks primitives in scene order, so the
  // image is identical for any thread count.
  std::vector<Rasterizer> bands;
  for (unsigned b = 0; b < threads; ++b) {
    int begin = static_cast<int>(static_cast<long long>(height) * b / threads);
    int end = static_cast<int>(static_cast<long long>(height) * (b + 1) / threads);
    bands.emplace_back(fb, begin, end);
  }

  for (const auto& object : scene.objects) {
    PreparedObject prepared = renderer.prepare(object);
    if (threads == 1) {
      SceneRenderer::rasterize(prepared, bands.front());
      continue;
    }
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (auto& band : bands) {
      workers.emplace_back([&prepared, &band] { SceneRenderer::rasterize(prepared, band); });
    }
  }
  return fb;
}

std::string encode_ppm(const Framebuffer& fb) {
  std::string out = "P6\n" + std::to_string(fb.width) + " " + std::to_string(fb.height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(fb.color.data()), fb.color.size());
  return out;
}

void write_ppm(const Framebuffer& fb, std::ostream& sink) {
  std::string bytes = encode_ppm(fb);
  sink.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!sink) throw std::runtime_error("failed to write PPM image");
}

ImageDiff image_diff(const Framebuffer& a, const Framebuffer& b) {
  if (a.width != b.width || a.height != b.height) throw std::invalid_argument("image sizes differ");
  ImageDiff diff;
  for (std::size_t i = 0; i < a.color.size(); i += 3) {
    int worst = 0;
    for (int k = 0; k < 3; ++k) worst = std::max(worst, std::abs(int(a.color[i + k]) - int(b.color[i + k])));
    if (worst > 0) ++diff.differing_pixels;
    diff.max_channel_delta = std::max(diff.max_channel_delta, worst);
  }
  return diff;
}

}  // namespace luagfx
