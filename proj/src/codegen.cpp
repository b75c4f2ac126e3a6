#include "luagfx/codegen.hpp"

#include <algorithm>
#include <stdexcept>
#include <string_view>
#include <utility>

#include "luagfx/scene_document.hpp"
#include "luagfx/zip.hpp"

namespace luagfx {
namespace {

struct TemplateSource {
  std::string_view name;
  std::string_view text;
};

constexpr TemplateSource kTemplates[] = {
#include "luagfx_templates.inc"
};

constexpr std::string_view kDocumentMarker = "@SCENE_DOCUMENT@";
constexpr std::string_view kDocumentPrefix = "var sceneDocument = ";

std::string_view template_text(std::string_view name) {
  for (const auto& source : kTemplates) {
    if (source.name == name) return source.text;
  }
  throw std::logic_error("missing template " + std::string(name));
}

void replace_once(std::string& text, std::string_view marker, std::string_view value) {
  auto at = text.find(marker);
  if (at == std::string::npos) throw std::logic_error("template marker missing: " + std::string(marker));
  text.replace(at, marker.size(), value);
}

std::string vector_literal(const Vec3& v) {
  return "[" + format_json_number(v.x) + ", " + format_json_number(v.y) + ", " + format_json_number(v.z) + "]";
}

}  // namespace

const std::vector<std::string>& template_paths() {
  static const std::vector<std::string> paths{"index.html", "scene_data.js", "shaders.js",
                                              "matrix.js",  "renderer.js",   "main.js"};
  return paths;
}

const TemplateFile* TemplatePackage::find(std::string_view path) const {
  auto it = std::find_if(files.begin(), files.end(), [&](const TemplateFile& f) { return f.path == path; });
  return it == files.end() ? nullptr : &*it;
}

std::size_t TemplatePackage::line_count() const {
  std::size_t lines = 0;
  for (const auto& file : files) {
    lines += static_cast<std::size_t>(std::count(file.text.begin(), file.text.end(), '\n'));
    if (!file.text.empty() && file.text.back() != '\n') ++lines;
  }
  return lines;
}

TemplatePackage generate_template(const Scene& scene) {
  TemplatePackage package;
  for (const std::string& path : template_paths()) {
    std::string text(template_text(path));
    if (path == "scene_data.js") {
      std::string document = serialize_scene(scene);
      document.pop_back();  // the trailing newline; the template supplies its own
      replace_once(text, kDocumentMarker, document);
    } else if (path == "renderer.js") {
      replace_once(text, "@HEADLIGHT_AMBIENT@", vector_literal(defaults::kLightAmbient));
      replace_once(text, "@HEADLIGHT_DIFFUSE@", vector_literal(defaults::kLightDiffuse));
      replace_once(text, "@HEADLIGHT_SPECULAR@", vector_literal(defaults::kLightSpecular));
    }
    package.files.push_back({path, std::move(text)});
  }
  return package;
}

std::string extract_scene_document(const TemplatePackage& package) {
  const TemplateFile* data = package.find("scene_data.js");
  if (!data) return {};
  const std::string& text = data->text;
  auto begin = text.find(kDocumentPrefix);
  auto end = text.rfind(";\n");
  if (begin == std::string::npos || end == std::string::npos || end < begin) return {};
  begin += kDocumentPrefix.size();
  return text.substr(begin, end - begin) + "\n";
}

std::vector<std::uint8_t> package_archive(const TemplatePackage& package) {
  std::vector<zip::Entry> entries;
  entries.reserve(package.files.size());
  for (const auto& file : package.files) entries.push_back({file.path, file.text});
  return zip::write_archive(entries);
}

}  // namespace luagfx
