#include <doctest.h>

#include <cctype>
#include <regex>
#include <set>
#include <sstream>

#include "luagfx/codegen.hpp"
#include "luagfx/core.hpp"
#include "luagfx/scene_document.hpp"
#include "luagfx/zip.hpp"
#include "oracles.hpp"

using namespace luagfx;

namespace {

Scene scene_of(const std::string& source) {
  Interpretation result = interpret(source);
  REQUIRE_MESSAGE(result.status == Status::Ok, result.message);
  return *result.scene;
}

// Identifiers outside string literals and comments, skipping property names after '.'.
std::set<std::string> script_identifiers(const std::string& text) {
  std::set<std::string> names;
  std::size_t i = 0;
  char previous = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      i = text.find('\n', i);
      if (i == std::string::npos) break;
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
      i = text.find("*/", i + 2);
      if (i == std::string::npos) break;
      i += 2;
      continue;
    }
    if (c == '"' || c == '\'' || c == '`') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] != c) j += text[j] == '\\' ? 2 : 1;
      i = j + 1;
      previous = c;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_' || text[j] == '$')) {
        ++j;
      }
      if (previous != '.') names.insert(text.substr(i, j - i));
      i = j;
      previous = 'a';
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '.')) ++i;
      previous = '0';
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(c))) previous = c;
    ++i;
  }
  return names;
}

std::size_t longest_line(const std::string& text) {
  std::istringstream lines(text);
  std::size_t longest = 0;
  for (std::string line; std::getline(lines, line);) longest = std::max(longest, line.size());
  return longest;
}

}  // namespace

TEST_CASE("package layout") {
  TemplatePackage package = generate_template(scene_of("DrawCube('triangles')"));
  REQUIRE(package.files.size() == 6);
  std::vector<std::string> paths;
  for (const auto& file : package.files) paths.push_back(file.path);
  CHECK(paths == template_paths());
  CHECK(paths.front() == "index.html");
  for (const auto& path : paths) CHECK(package.find(path) != nullptr);
  CHECK(package.find("missing.js") == nullptr);
}

TEST_CASE("scene data embeds the canonical document verbatim") {
  for (const auto& path : testdata::scripts("scenes")) {
    Interpretation result = testdata::interpret_file(path);
    REQUIRE(result.scene.has_value());
    TemplatePackage package = generate_template(*result.scene);
    std::string document = serialize_scene(*result.scene);
    CHECK(extract_scene_document(package) == document);
    CHECK(package.find("scene_data.js")->text.find(document.substr(0, document.size() - 1)) != std::string::npos);
    CHECK(parse_scene_document(extract_scene_document(package)) == *result.scene);
  }
}

TEST_CASE("the page references only packaged files") {
  TemplatePackage package = generate_template(scene_of("DrawCube('triangles')"));
  std::regex absolute(R"((https?|ftp|file|data):|//[a-zA-Z0-9-]+\.[a-zA-Z])");
  for (const auto& file : package.files) {
    CHECK_MESSAGE(!std::regex_search(file.text, absolute), file.path);
  }
  const std::string& html = package.find("index.html")->text;
  std::regex src(R"(src\s*=\s*"([^"]*)\")");
  std::set<std::string> referenced;
  for (auto it = std::sregex_iterator(html.begin(), html.end(), src); it != std::sregex_iterator(); ++it) {
    referenced.insert((*it)[1]);
  }
  std::set<std::string> scripts;
  for (const auto& file : package.files) {
    if (file.path != "index.html") scripts.insert(file.path);
  }
  CHECK(referenced == scripts);
  CHECK(html.find("href") == std::string::npos);
}

TEST_CASE("generated text stays readable") {
  for (const auto& path : testdata::scripts("scenes")) {
    Interpretation result = testdata::interpret_file(path);
    TemplatePackage package = generate_template(*result.scene);
    for (const auto& file : package.files) {
      CHECK_MESSAGE(longest_line(file.text) <= 120, file.path);
      if (file.path == "index.html" || file.path == "scene_data.js") continue;
      for (const auto& name : script_identifiers(file.text)) {
        bool loop_index = name == "i" || name == "j" || name == "k";
        CHECK_MESSAGE((name.size() > 1 || loop_index), (file.path + ": " + name));
      }
    }
  }
}

TEST_CASE("identifier scanner") {
  auto names = script_identifiers("var count = 1; // x\n/* y */ obj.z = \"w\" + 'v';\nfor (i = 0;;) {}");
  CHECK(names == std::set<std::string>{"var", "count", "obj", "for", "i"});
}

TEST_CASE("template constants follow the scene") {
  TemplatePackage package = generate_template(scene_of("DrawCube('triangles')"));
  std::string all;
  for (const auto& file : package.files) all += file.text;
  CHECK(all.find('@') == std::string::npos);
  const std::string& shaders = package.find("shaders.js")->text;
  for (const char* key : {"flat", "gouraud", "blinn-phong"}) CHECK(shaders.find(key) != std::string::npos);
}

TEST_CASE("programmatic effort") {
  const std::string source = "DrawCube(\"triangles\")\n";
  const double source_lines = 1;
  TemplatePackage package = generate_template(scene_of(source));
  CHECK(package.line_count() >= 200);
  CHECK(package.line_count() / source_lines >= 20);
}

TEST_CASE("OBJ scenes embed the mesh, not the file") {
  Interpretation result = testdata::interpret_file(testdata::corpus("scenes") / "obj_shared_cube.lua");
  TemplatePackage package = generate_template(*result.scene);
  for (const auto& file : package.files) {
    if (file.path == "scene_data.js") continue;
    CHECK(file.text.find("shared_cube") == std::string::npos);
  }
  const std::string& data = package.find("scene_data.js")->text;
  std::size_t mention = data.find("shared_cube.obj");
  REQUIRE(mention != std::string::npos);
  CHECK(data.rfind("\"source_name\": ", mention) == mention - 16);
  CHECK(data.find("shared_cube.obj", mention + 1) == std::string::npos);
}

TEST_CASE("archives") {
  TemplatePackage package = generate_template(scene_of("DrawCube('triangles')"));
  std::vector<std::uint8_t> first = package_archive(package);
  CHECK(package_archive(package) == first);
  std::vector<zip::Entry> entries = zip::read_archive(first);
  REQUIRE(entries.size() == 6);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    CHECK(entries[i].path == package.files[i].path);
    CHECK(entries[i].data == package.files[i].text);
  }
  CHECK(zip::read_archive(package_archive(generate_template(scene_of("")))).size() == 6);

  std::vector<std::uint8_t> corrupted = first;
  std::size_t payload = 30 + entries[0].path.size() + 5;
  corrupted[payload] ^= 0x20;
  CHECK_THROWS_AS(zip::read_archive(corrupted), zip::ZipError);
  CHECK_THROWS_AS(zip::read_archive({1, 2, 3}), zip::ZipError);
}

TEST_CASE("zip writer") {
  std::vector<zip::Entry> entries{{"a.txt", "hello"}, {"dir/b.txt", ""}, {"c.bin", std::string("\0\1\2", 3)}};
  std::vector<std::uint8_t> bytes = zip::write_archive(entries);
  CHECK(zip::read_archive(bytes) == entries);
  CHECK(bytes[0] == 'P');
  CHECK(bytes[1] == 'K');
  CHECK(bytes[2] == 3);
  CHECK(bytes[3] == 4);
  CHECK(zip::read_archive(zip::write_archive({})).empty());
}
