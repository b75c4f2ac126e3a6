#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "luagfx/core.hpp"
#include "luagfx/scene_document.hpp"
#include "oracles.hpp"

using namespace luagfx;

namespace {

std::size_t longest_line(const std::string& text) {
  std::istringstream lines(text);
  std::size_t longest = 0;
  for (std::string line; std::getline(lines, line);) longest = std::max(longest, line.size());
  return longest;
}

Scene scene_of(const std::string& source) {
  Interpretation result = interpret(source);
  REQUIRE_MESSAGE(result.status == Status::Ok, result.message);
  return *result.scene;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_json_number(0) == "0");
  CHECK(format_json_number(-0.0) == "0");
  CHECK(format_json_number(1) == "1");
  CHECK(format_json_number(0.1) == "0.1");
  CHECK(format_json_number(-2.5) == "-2.5");
  CHECK(format_json_number(1e-7) == "1e-07");
  CHECK(format_json_number(0.7071067811865476) == "0.7071067811865476");
  for (double value : {0.1 + 0.2, 1.0 / 3, 6.123233995736766e-17, 1e300, -123456.789}) {
    CHECK(std::stod(format_json_number(value)) == value);
  }
  CHECK_THROWS(format_json_number(std::numeric_limits<double>::infinity()));
}

TEST_CASE("string quoting") {
  CHECK(quote_json("plain") == "\"plain\"");
  CHECK(quote_json("a\"b\\c\n") == "\"a\\\"b\\\\c\\n\"");
  CHECK(quote_json(std::string("\x01", 1)) == "\"\\u0001\"");
}

TEST_CASE("empty scene document") {
  std::string text = serialize_scene(scene_of(""));
  nlohmann::json doc = nlohmann::json::parse(text);
  CHECK(doc["objects"].is_array());
  CHECK(doc["objects"].empty());
  CHECK(doc["lights"].empty());
  CHECK(doc["shading"] == "blinn-phong");
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  std::sort(keys.begin(), keys.end());
  CHECK(keys == std::vector<std::string>{"camera", "clear_color", "lights", "objects", "shading"});
  CHECK(text.find("\"camera\"") < text.find("\"shading\""));
  CHECK(text.find("\"shading\"") < text.find("\"clear_color\""));
  CHECK(text.find("\"clear_color\"") < text.find("\"objects\""));
  CHECK(text.find("\"objects\"") < text.find("\"lights\""));
  CHECK(text.back() == '\n');
}

TEST_CASE("translated cube matrix") {
  nlohmann::json doc =
      nlohmann::json::parse(serialize_scene(scene_of("DrawCube('triangles')\nTranslateObject({2, 0, 0})")));
  const auto& m = doc["objects"][0]["model_matrix"];
  REQUIRE(m.size() == 16);
  CHECK(m[12] == 2);
  CHECK(m[13] == 0);
  CHECK(m[14] == 0);
  CHECK(m[15] == 1);
  CHECK(doc["objects"][0]["source_kind"] == "cube");
  CHECK(doc["objects"][0]["display_mode"] == "triangles");
  CHECK(doc["objects"][0]["mesh"]["triangles"].size() == 36);
  CHECK(doc["objects"][0]["mesh"]["positions"].size() == 72);
}

TEST_CASE("light parameters") {
  nlohmann::json doc = nlohmann::json::parse(serialize_scene(
      scene_of("DrawPointLight({1, 2, 3})\nDrawDirectionalLight({0, 0, 0}, {0, -1, 0})\n"
               "DrawSpotLight({0, 5, 0}, {0, -1, 0}, 30, 2)")));
  const auto& lights = doc["lights"];
  REQUIRE(lights.size() == 3);
  CHECK(lights[0]["kind"] == "point");
  CHECK_FALSE(lights[0].contains("direction"));
  CHECK(lights[1]["kind"] == "directional");
  CHECK(lights[1]["direction"] == nlohmann::json::array({0, -1, 0}));
  CHECK_FALSE(lights[1].contains("cutoff_deg"));
  CHECK(lights[2]["kind"] == "spot");
  CHECK(lights[2]["cutoff_deg"] == 30);
  CHECK(lights[2]["exponent"] == 2);
}

TEST_CASE("round trip and fixpoint over the scene corpus") {
  for (const auto& path : testdata::scripts("scenes")) {
    Interpretation result = testdata::interpret_file(path);
    REQUIRE_MESSAGE(result.scene.has_value(), path.filename().string());
    std::string first = serialize_scene(*result.scene);
    Scene parsed = parse_scene_document(first);
    CHECK_MESSAGE(parsed == *result.scene, path.filename().string());
    CHECK(serialize_scene(parsed) == first);
    CHECK(longest_line(first) <= kMaxDocumentLine);
  }
}

TEST_CASE("the parser accepts any layout") {
  Scene scene = scene_of("DrawSphere('points')\nRotateObject(33, {1, 2, 3})\nDrawSpotLight({0, 5, 0}, {0, -1, 0}, 30, 2)");
  std::string canonical = serialize_scene(scene);
  std::string compact = nlohmann::json::parse(canonical).dump();
  CHECK(parse_scene_document(compact) == scene);
  CHECK(serialize_scene(parse_scene_document(compact)) == canonical);
}

TEST_CASE("malformed documents are rejected") {
  std::string good = serialize_scene(scene_of("DrawCube('triangles')"));
  CHECK_THROWS_AS(parse_scene_document("{"), DocumentError);
  CHECK_THROWS_AS(parse_scene_document("[]"), DocumentError);

  auto mutated = [&](auto edit) {
    nlohmann::json doc = nlohmann::json::parse(good);
    edit(doc);
    return doc.dump();
  };
  CHECK_THROWS_AS(parse_scene_document(mutated([](auto& d) { d.erase("camera"); })), DocumentError);
  CHECK_THROWS_AS(parse_scene_document(mutated([](auto& d) { d["shading"] = "phong"; })), DocumentError);
  CHECK_THROWS_AS(parse_scene_document(mutated([](auto& d) { d["objects"][0]["id"] = 3; })), DocumentError);
  CHECK_THROWS_AS(parse_scene_document(mutated([](auto& d) { d["objects"][0]["model_matrix"].erase(0); })),
                  DocumentError);
  CHECK_THROWS_AS(parse_scene_document(mutated([](auto& d) { d["objects"][0]["mesh"]["triangles"][0] = 999; })),
                  DocumentError);
  CHECK_THROWS_AS(parse_scene_document(mutated([](auto& d) { d["clear_color"] = "grey"; })), DocumentError);
}
