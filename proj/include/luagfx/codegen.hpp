#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "luagfx/scene.hpp"

namespace luagfx {

struct TemplateFile {
  std::string path;
  std::string text;

  bool operator==(const TemplateFile&) const = default;
};

/// The exported web page: index.html plus five classic scripts, in this order.
struct TemplatePackage {
  std::vector<TemplateFile> files;

  const TemplateFile* find(std::string_view path) const;
  std::size_t line_count() const;
};

/// Paths of the package files, in archive order.
const std::vector<std::string>& template_paths();

TemplatePackage generate_template(const Scene& scene);

/// Recovers the scene document text embedded in scene_data.js; empty if absent.
std::string extract_scene_document(const TemplatePackage& package);

/// Deterministic zip (stored entries, fixed timestamps) of the package files.
std::vector<std::uint8_t> package_archive(const TemplatePackage& package);

}  // namespace luagfx
