#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "luagfx/scene.hpp"

namespace luagfx {

using Rgb8 = std::array<std::uint8_t, 3>;

struct Framebuffer {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> color;  // row-major rgb, row 0 at the top
  std::vector<float> depth;         // row-major, +inf is empty

  Framebuffer(int w, int h, const Rgb8& clear = {0, 0, 0});

  Rgb8 pixel(int x, int y) const;
  void set_pixel(int x, int y, const Rgb8& rgb);
  bool operator==(const Framebuffer&) const = default;
};

Rgb8 to_rgb8(const Vec3& color);

struct RenderOptions {
  /// Worker threads for rasterization; 0 picks the hardware concurrency. The image
  /// does not depend on this value.
  unsigned threads = 0;
};

/// Software reference rendering of `scene`. Throws std::invalid_argument for a
/// degenerate camera or non-positive size.
Framebuffer render(const Scene& scene, int width, int height, const RenderOptions& options = {});

/// Binary PPM (P6, maxval 255).
std::string encode_ppm(const Framebuffer& fb);
void write_ppm(const Framebuffer& fb, std::ostream& sink);

struct ImageDiff {
  int max_channel_delta = 0;
  int differing_pixels = 0;
  bool operator==(const ImageDiff&) const = default;
};

/// Exact per-channel comparison; throws std::invalid_argument on a size mismatch.
ImageDiff image_diff(const Framebuffer& a, const Framebuffer& b);

}  // namespace luagfx
