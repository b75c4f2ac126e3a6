#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "luagfx/scene.hpp"

namespace luagfx {

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Longest line the canonical writer emits.
inline constexpr std::size_t kMaxDocumentLine = 120;

/// Canonical JSON text of a scene: fixed key order, shortest round-trip numbers,
/// two-space indentation and number arrays wrapped below kMaxDocumentLine columns.
std::string serialize_scene(const Scene& scene);

/// Inverse of serialize_scene. Accepts any JSON layout with the same keys.
Scene parse_scene_document(std::string_view text);

/// Shortest decimal that reads back as the same double; -0 is written as 0.
std::string format_json_number(double value);

/// JSON string literal, quotes included.
std::string quote_json(std::string_view text);

}  // namespace luagfx
