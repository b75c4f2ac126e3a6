// Acceptance suite: one PASS/FAIL line per primary criterion.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "ast_walk.hpp"
#include "luagfx/cli.hpp"
#include "luagfx/codegen.hpp"
#include "luagfx/core.hpp"
#include "luagfx/parser.hpp"
#include "luagfx/raster.hpp"
#include "luagfx/scene_document.hpp"
#include "luagfx/shading.hpp"
#include "luagfx/zip.hpp"
#include "oracles.hpp"

using namespace luagfx;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& failure) {
    if (!condition && pass) {
      pass = false;
      detail = failure;
    }
  }
};

int line_count(const std::string& text) {
  int lines = 0;
  for (char c : text) lines += c == '\n';
  if (!text.empty() && text.back() != '\n') ++lines;
  return lines;
}

Scene scene_or_empty(const std::string& source) {
  Interpretation result = interpret(source);
  return result.scene ? *result.scene : Scene{};
}

Verdict grammar_coverage() {
  Verdict v;
  fs::path path = testdata::corpus("grammar") / "all_constructs.lua";
  std::string source = testdata::read_file(path);
  Interpretation result = interpret(source);
  v.require(result.status == Status::Ok, "all_constructs.lua failed: " + result.message);
  std::set<std::string> seen = astwalk::kinds(parse_source(source));
  std::vector<std::string> needed{"LocalDecl", "Assign",     "CallStat", "While",   "If",     "IfElseif",
                                  "Else",      "NumericFor", "Repeat",   "Break",   "Return", "TableCtor",
                                  "FunctionExpr", "LocalFunctionDecl", "FunctionDecl"};
  for (const char* op : {"or", "and", "<", ">", "<=", ">=", "~=", "==", "|", "~", "&", "<<", ">>", "..", "+", "-",
                         "*", "/", "%", "^"}) {
    needed.push_back(std::string("BinOp ") + op);
  }
  for (const char* op : {"-", "not", "#", "~"}) needed.push_back(std::string("UnOp ") + op);
  for (const auto& kind : needed) v.require(seen.count(kind) == 1, "construct not exercised: " + kind);
  v.require(source.find("--[[") != std::string::npos, "no long comment in the grammar corpus");
  v.require(source.find("\n--") != std::string::npos || source.rfind("--", 0) == 0, "no line comment");

  auto negatives = testdata::scripts("negative");
  v.require(negatives.size() >= 10, "negative corpus has " + std::to_string(negatives.size()) + " scripts");
  int matched = 0;
  for (const auto& negative : negatives) {
    std::string text = testdata::read_file(negative);
    Interpretation bad = interpret(text);
    bool ok = bad.status == Status::SyntaxError && bad.line == testdata::expected_error_line(text);
    v.require(ok, negative.filename().string() + " reported line " + std::to_string(bad.line));
    matched += ok;
  }
  if (v.pass) {
    v.detail = std::to_string(needed.size()) + " constructs covered, " + std::to_string(matched) +
               " negative scripts on the expected line";
  }
  return v;
}

Verdict interpreter_oracle() {
  Verdict v;
  auto start = std::chrono::steady_clock::now();
  auto scripts = testdata::scripts("oracle");
  v.require(scripts.size() >= 30, "only " + std::to_string(scripts.size()) + " oracle scripts");
  for (const auto& path : scripts) {
    Interpretation result = interpret(testdata::read_file(path));
    std::string out;
    for (const auto& line : result.console) out += line + "\n";
    fs::path expected = path;
    expected.replace_extension(".expected");
    v.require(result.status == Status::Ok && out == testdata::read_file(expected),
              path.filename().string() + " differs from the reference output");
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(seconds < 5.0, "took " + std::to_string(seconds) + " s");
  if (v.pass) {
    std::ostringstream detail;
    detail << scripts.size() << " scripts byte-identical in " << seconds << " s";
    v.detail = detail.str();
  }
  return v;
}

Verdict sphere_tessellation() {
  Verdict v;
  std::size_t triangles = gen_sphere().triangles.size();
  Scene scene = scene_or_empty("DrawSphere(\"triangles\")");
  v.require(triangles == 2880, "default sphere has " + std::to_string(triangles) + " triangles");
  v.require(scene.triangle_count() == 2880, "DrawSphere object has " + std::to_string(scene.triangle_count()));
  if (v.pass) v.detail = "2880 triangles";
  return v;
}

Verdict normal_averaging() {
  Verdict v;
  Interpretation result = testdata::interpret_file(testdata::corpus("scenes") / "obj_shared_cube.lua");
  v.require(result.status == Status::Ok, "obj_shared_cube.lua failed: " + result.message);
  if (!v.pass) return v;
  const Mesh& mesh = *result.scene->objects.at(0).mesh;
  v.require(mesh.positions.size() == 8 && mesh.triangles.size() == 12, "unexpected shared cube topology");
  double worst = 0;
  const double component = 1 / std::sqrt(3.0);
  for (std::uint32_t i = 0; i < mesh.positions.size(); ++i) {
    Vec3 brute = oracle::incident_normal(mesh.positions, mesh.triangles, i);
    const Vec3& p = mesh.positions[i];
    Vec3 diagonal{std::copysign(component, p.x), std::copysign(component, p.y), std::copysign(component, p.z)};
    worst = std::max({worst, length(mesh.normals[i] - brute), length(mesh.normals[i] - diagonal)});
  }
  v.require(worst < 1e-6, "corner normal error " + std::to_string(worst));
  if (v.pass) {
    std::ostringstream detail;
    detail << "8 corners within " << worst << " of the diagonal and the incident-face sum";
    v.detail = detail.str();
  }
  return v;
}

Verdict lighting_analytics() {
  Verdict v;
  Scene scene = scene_or_empty(
      "DrawCube('triangles')\nAmbientComponent({1, 0, 0})\nDiffuseComponent({0, 0, 0})\nSpecularComponent({0, 0, 0})\n"
      "DrawPointLight({0, 5, 0})\nAmbientComponent({1, 1, 1})\nDiffuseComponent({0, 0, 0})\n"
      "SpecularComponent({0, 0, 0})");
  Framebuffer fb = render(scene, 256, 256);
  Rgb8 clear = to_rgb8(scene.clear_color);
  int covered = 0;
  int wrong = 0;
  for (int y = 0; y < fb.height; ++y) {
    for (int x = 0; x < fb.width; ++x) {
      Rgb8 p = fb.pixel(x, y);
      if (p == clear) continue;
      ++covered;
      wrong += p != Rgb8{255, 0, 0};
    }
  }
  v.require(covered > 0 && wrong == 0, std::to_string(wrong) + " covered pixels differ from (255, 0, 0)");

  Light light;
  light.kind = LightKind::Directional;
  light.direction = {0, 0, -1};
  light.ambient = {0, 0, 0};
  light.diffuse = {1, 1, 1};
  light.specular = {1, 1, 1};
  ShadePoint aligned{{0, 0, 0}, {0, 0, 1}, {0, 0, 1}};
  Vec3 diffuse = illuminate(aligned, Material{{0, 0, 0}, {1, 1, 1}, {0, 0, 0}, 32}, std::span(&light, 1),
                            SpecularVariant::Phong);
  v.require(diffuse == Vec3{1, 1, 1}, "aligned diffuse is not 1");
  Material shiny{{0, 0, 0}, {0, 0, 0}, {0.5, 0.25, 1}, 40};
  Vec3 blinn = illuminate_unclamped(aligned, shiny, std::span(&light, 1), SpecularVariant::Blinn);
  Vec3 phong = illuminate_unclamped(aligned, shiny, std::span(&light, 1), SpecularVariant::Phong);
  v.require(length(blinn - phong) <= 1e-12, "Blinn and Phong specular disagree at aligned geometry");

  // Over-bright lighting must saturate instead of wrapping around.
  Scene bright = scene_or_empty(
      "DrawSphere('triangles')\nAmbientComponent({1, 1, 1})\nDiffuseComponent({1, 1, 1})\n"
      "for i = 1, 6 do DrawPointLight({0, 0, 4}) AmbientComponent({1, 1, 1}) end");
  Framebuffer saturated = render(bright, 64, 64);
  v.require(saturated.pixel(32, 32) == Rgb8{255, 255, 255}, "over-bright pixel did not saturate at 255");
  if (v.pass) v.detail = "ambient product exact, aligned diffuse 1, Blinn equals Phong, channels saturate at 255";
  return v;
}

Verdict shading_consistency() {
  Verdict v;
  int worst = 0;
  int differing = 0;
  for (const char* light : {"", "DrawDirectionalLight({0, 0, 0}, {-1, -2, -3})\n"}) {
    const std::string body = std::string("DrawCube('triangles')\n") + light;
    Framebuffer flat = render(scene_or_empty("ChangeLighting('flat')\n" + body), 256, 256);
    Framebuffer gouraud = render(scene_or_empty("ChangeLighting('gouraud')\n" + body), 256, 256);
    ImageDiff diff = image_diff(flat, gouraud);
    worst = std::max(worst, diff.max_channel_delta);
    differing += diff.differing_pixels;
  }
  v.require(worst <= 1, "max channel delta " + std::to_string(worst));
  if (v.pass) {
    v.detail = "headlight and one explicit directional light: max channel delta " + std::to_string(worst) + ", " +
               std::to_string(differing) + " differing pixels";
  }
  return v;
}

Verdict template_equivalence() {
  Verdict v;
  int checked = 0;
  for (const char* sub : {"scenes", "grammar", "oracle"}) {
    for (const auto& path : testdata::scripts(sub)) {
      Interpretation result = testdata::interpret_file(path);
      v.require(result.status == Status::Ok, path.filename().string() + " failed: " + result.message);
      if (!result.scene) continue;
      TemplatePackage package = generate_template(*result.scene);
      std::string embedded = extract_scene_document(package);
      Scene parsed = parse_scene_document(embedded);
      v.require(parsed == *result.scene, path.filename().string() + ": embedded scene differs");
      v.require(serialize_scene(parsed) == embedded, path.filename().string() + ": serialization is not a fixpoint");
      ++checked;
    }
  }
  if (v.pass) v.detail = std::to_string(checked) + " corpus scripts round-trip through the template";
  return v;
}

Verdict programmatic_effort() {
  Verdict v;
  std::string cube = testdata::read_file(testdata::corpus("scenes") / "cube.lua");
  int cube_lines = line_count(cube);
  v.require(cube_lines <= 5, "cube script has " + std::to_string(cube_lines) + " lines");
  Export cube_export = export_archive(cube);
  v.require(!cube_export.archive.empty(), "cube export failed");
  std::size_t generated = 0;
  for (const auto& entry : zip::read_archive(cube_export.archive)) generated += line_count(entry.data);
  double ratio = static_cast<double>(generated) / cube_lines;
  v.require(generated >= 200, "package has " + std::to_string(generated) + " lines");
  v.require(ratio >= 20, "ratio " + std::to_string(ratio));

  std::string three = testdata::read_file(testdata::corpus("scenes") / "three_objects_three_lights.lua");
  int three_lines = line_count(three);
  v.require(three_lines <= 15, "three-object script has " + std::to_string(three_lines) + " lines");
  Export three_export = export_archive(three);
  TemplatePackage unpacked;
  for (const auto& entry : zip::read_archive(three_export.archive)) unpacked.files.push_back({entry.path, entry.data});
  Scene parsed = parse_scene_document(extract_scene_document(unpacked));
  v.require(parsed.objects.size() == 3 && parsed.lights.size() == 3, "exported scene does not hold 3 objects and 3 lights");
  if (v.pass) {
    std::ostringstream detail;
    detail << cube_lines << "-line script gives " << generated << " generated lines (" << ratio << "x); "
           << three_lines << "-line script exports 3 objects and 3 lights";
    v.detail = detail.str();
  }
  return v;
}

Verdict once_only() {
  Verdict v;
  BenchRow row = bench_spheres(100);
  v.require(row.evaluations == 1, "script evaluated " + std::to_string(row.evaluations) + " times");
  v.require(row.triangles == 100 * 2880, "scene holds " + std::to_string(row.triangles) + " triangles");
  v.require(row.parse_ms >= 0 && row.evaluate_ms >= 0 && row.first_frame_ms > 0 && row.second_frame_ms > 0,
            "timing fields missing");
  std::string json = bench_json({row});
  for (const char* field : {"\"parse_ms\"", "\"evaluate_ms\"", "\"first_frame_ms\"", "\"second_frame_ms\""}) {
    v.require(json.find(field) != std::string::npos, std::string("report lacks ") + field);
  }
  if (v.pass) {
    std::ostringstream detail;
    detail << "N=100: parse " << row.parse_ms << " ms, evaluate " << row.evaluate_ms << " ms (once), frames "
           << row.first_frame_ms << " / " << row.second_frame_ms << " ms";
    v.detail = detail.str();
  }
  return v;
}

int run_command(const std::string& arguments) {
  std::string command = std::string("\"") + LUAGFX_CLI_PATH + "\" " + arguments + " >/dev/null 2>&1";
  return std::system(command.c_str());
}

Verdict determinism() {
  Verdict v;
  fs::path dir = fs::temp_directory_path() / ("luagfx_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto file = [&](const std::string& name) { return "\"" + (dir / name).string() + "\""; };
  int compared = 0;
  for (const auto& path : testdata::scripts("scenes")) {
    std::string script = "\"" + path.string() + "\"";
    bool ran = run_command("render " + script + " --out " + file("a.ppm") + " --threads 1") == 0 &&
               run_command("render " + script + " --out " + file("b.ppm") + " --threads 1") == 0 &&
               run_command("render " + script + " --out " + file("c.ppm") + " --threads 4") == 0 &&
               run_command("export " + script + " --out " + file("a.zip")) == 0 &&
               run_command("export " + script + " --out " + file("b.zip")) == 0;
    v.require(ran, path.filename().string() + ": command failed");
    if (!ran) continue;
    std::string a = testdata::read_file(dir / "a.ppm");
    v.require(a == testdata::read_file(dir / "b.ppm"), path.filename().string() + ": render differs between runs");
    v.require(a == testdata::read_file(dir / "c.ppm"), path.filename().string() + ": render differs across threads");
    v.require(testdata::read_file(dir / "a.zip") == testdata::read_file(dir / "b.zip"),
              path.filename().string() + ": export differs between runs");
    ++compared;
  }
  fs::remove_all(dir);
  if (v.pass) v.detail = std::to_string(compared) + " scripts byte-identical across runs and thread counts";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"grammar coverage", grammar_coverage},
      {"interpreter oracle", interpreter_oracle},
      {"sphere tessellation", sphere_tessellation},
      {"normal averaging", normal_averaging},
      {"lighting analytics", lighting_analytics},
      {"shading-model consistency", shading_consistency},
      {"scene-template equivalence", template_equivalence},
      {"programmatic effort", programmatic_effort},
      {"once-only interpretation", once_only},
      {"determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict verdict;
    try {
      verdict = check();
    } catch (const std::exception& error) {
      verdict = {false, std::string("exception: ") + error.what()};
    }
    failures += !verdict.pass;
    std::cout << (verdict.pass ? "PASS " : "FAIL ") << name << ": " << verdict.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
