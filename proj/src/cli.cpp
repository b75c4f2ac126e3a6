#include "luagfx/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "luagfx/core.hpp"
#include "luagfx/parser.hpp"
#include "luagfx/raster.hpp"
#include "luagfx/scene_document.hpp"

namespace luagfx {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream bytes;
  bytes << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return bytes.str();
}

// Writes through a temporary file so a failed write never leaves a partial output.
bool write_file(const fs::path& path, std::string_view bytes) {
  fs::path temporary = path;
  temporary += ".partial";
  {
    std::ofstream out(temporary, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
      std::error_code ignored;
      fs::remove(temporary, ignored);
      return false;
    }
  }
  std::error_code error;
  fs::rename(temporary, path, error);
  return !error;
}

struct Options {
  std::string script;
  std::string assets;
  std::string out;
  std::string scene_out;
  int width = 256;
  int height = 256;
  unsigned threads = 0;
  std::vector<int> counts{10, 100, 1000};
  bool json = false;
};

int report_failure(const Interpretation& result, std::ostream& out, std::ostream& err) {
  for (const auto& line : result.console) out << line << '\n';
  err << "line " << result.line << ": " << result.message << '\n';
  return result.status == Status::SyntaxError ? exit_code::kSyntaxError : exit_code::kRuntimeError;
}

// Reads and interprets the script; returns an exit code when the command must stop.
std::optional<int> load(const Options& options, Interpretation& result, std::ostream& out, std::ostream& err) {
  auto source = read_file(options.script);
  if (!source) {
    err << "cannot read script '" << options.script << "'\n";
    return exit_code::kIoError;
  }
  fs::path assets = options.assets.empty() ? fs::path(options.script).parent_path() : fs::path(options.assets);
  if (assets.empty()) assets = ".";
  result = interpret(*source, directory_resolver(assets.string()));
  if (result.status != Status::Ok) return report_failure(result, out, err);
  return std::nullopt;
}

int cmd_run(const Options& options, std::ostream& out, std::ostream& err) {
  Interpretation result;
  if (auto code = load(options, result, out, err)) return *code;
  for (const auto& line : result.console) out << line << '\n';
  if (!options.scene_out.empty() && !write_file(options.scene_out, serialize_scene(*result.scene))) {
    err << "cannot write '" << options.scene_out << "'\n";
    return exit_code::kIoError;
  }
  return exit_code::kOk;
}

int cmd_render(const Options& options, std::ostream& out, std::ostream& err) {
  Interpretation result;
  if (auto code = load(options, result, out, err)) return *code;
  for (const auto& line : result.console) out << line << '\n';
  std::optional<Framebuffer> image;
  try {
    image = render(*result.scene, options.width, options.height, RenderOptions{options.threads});
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return exit_code::kRuntimeError;
  }
  if (!write_file(options.out, encode_ppm(*image))) {
    err << "cannot write '" << options.out << "'\n";
    return exit_code::kIoError;
  }
  return exit_code::kOk;
}

int cmd_export(const Options& options, std::ostream& out, std::ostream& err) {
  Interpretation result;
  if (auto code = load(options, result, out, err)) return *code;
  for (const auto& line : result.console) out << line << '\n';
  auto archive = package_archive(generate_template(*result.scene));
  std::string_view bytes(reinterpret_cast<const char*>(archive.data()), archive.size());
  if (!write_file(options.out, bytes)) {
    err << "cannot write '" << options.out << "'\n";
    return exit_code::kIoError;
  }
  return exit_code::kOk;
}

int cmd_bench(const Options& options, std::ostream& out, std::ostream& err) {
  std::vector<BenchRow> rows;
  for (int count : options.counts) {
    if (count <= 0) {
      err << "bench counts must be positive\n";
      return exit_code::kUsage;
    }
    rows.push_back(bench_spheres(count, options.width, options.height, options.threads));
    if (rows.back().evaluations != 1) {
      err << "scene was evaluated " << rows.back().evaluations << " times\n";
      return exit_code::kRuntimeError;
    }
  }
  out << (options.json ? bench_json(rows) : bench_table(rows));
  return exit_code::kOk;
}

}  // namespace

std::string sphere_bench_script(int count) {
  int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(count))));
  std::ostringstream script;
  script << "local count = " << count << "\n"
         << "local side = " << side << "\n"
         << "for i = 0, count - 1 do\n"
         << "  local column = i % side\n"
         << "  local row = (i - column) / side\n"
         << "  DrawSphere(\"triangles\")\n"
         << "  TranslateObject({(column - side / 2) * 2.5, 0, -(row * 2.5)})\n"
         << "end\n";
  return script.str();
}

BenchRow bench_spheres(int count, int width, int height, unsigned threads) {
  BenchRow row;
  row.count = count;
  const std::string source = sphere_bench_script(count);

  auto start = Clock::now();
  Chunk chunk = parse_source(source);
  row.parse_ms = elapsed_ms(start);

  Interpreter session;
  start = Clock::now();
  const Scene scene = session.evaluate(chunk).scene;
  row.evaluate_ms = elapsed_ms(start);
  row.triangles = scene.triangle_count();

  // Both frames draw the stored scene; nothing below touches the parser or the session.
  start = Clock::now();
  Framebuffer first = render(scene, width, height, RenderOptions{threads});
  row.first_frame_ms = elapsed_ms(start);
  start = Clock::now();
  Framebuffer second = render(scene, width, height, RenderOptions{threads});
  row.second_frame_ms = elapsed_ms(start);
  row.evaluations = session.evaluations();
  if (image_diff(first, second).differing_pixels != 0) throw std::logic_error("frames of one scene differ");
  return row;
}

std::string bench_json(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "{\n  \"rows\": [";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const BenchRow& r = rows[i];
    out << (i ? "," : "") << "\n    {\"count\": " << r.count << ", \"triangles\": " << r.triangles
        << ", \"evaluations\": " << r.evaluations << ", \"parse_ms\": " << r.parse_ms
        << ", \"evaluate_ms\": " << r.evaluate_ms << ", \"first_frame_ms\": " << r.first_frame_ms
        << ", \"second_frame_ms\": " << r.second_frame_ms << "}";
  }
  out << "\n  ]\n}\n";
  return out.str();
}

std::string bench_table(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(8) << "spheres" << std::setw(12) << "triangles" << std::right << std::setw(12)
      << "parse ms" << std::setw(14) << "evaluate ms" << std::setw(16) << "1st frame ms" << std::setw(16)
      << "2nd frame ms" << '\n';
  out << std::fixed << std::setprecision(3);
  for (const BenchRow& r : rows) {
    out << std::left << std::setw(8) << r.count << std::setw(12) << r.triangles << std::right << std::setw(12)
        << r.parse_ms << std::setw(14) << r.evaluate_ms << std::setw(16) << r.first_frame_ms << std::setw(16)
        << r.second_frame_ms << '\n';
  }
  return out.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interpret, render and export graphics scripts"};
  app.require_subcommand(1);
  Options options;

  auto add_script = [&](CLI::App* command) {
    command->add_option("script", options.script, "Script file")->required();
    command->add_option("--assets", options.assets, "Directory holding OBJ assets (default: the script's directory)");
  };
  auto add_size = [&](CLI::App* command) {
    command->add_option("--width", options.width, "Image width in pixels")->check(CLI::PositiveNumber);
    command->add_option("--height", options.height, "Image height in pixels")->check(CLI::PositiveNumber);
    command->add_option("--threads", options.threads, "Rasterizer threads (0: all cores)");
  };

  auto* run = app.add_subcommand("run", "Evaluate a script and print its console output");
  add_script(run);
  run->add_option("--scene-out", options.scene_out, "Write the scene document to this file");

  auto* render_command = app.add_subcommand("render", "Render a script's scene to a PPM image");
  add_script(render_command);
  render_command->add_option("--out", options.out, "Output .ppm path")->required();
  add_size(render_command);

  auto* export_command = app.add_subcommand("export", "Export a script's scene as a zipped web page");
  add_script(export_command);
  export_command->add_option("--out", options.out, "Output .zip path")->required();

  auto* bench = app.add_subcommand("bench", "Time parsing, evaluation and two frames for sphere scenes");
  bench->add_option("--counts", options.counts, "Sphere counts")->delimiter(',')->check(CLI::PositiveNumber);
  bench->add_flag("--json", options.json, "Print a JSON report");
  add_size(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  if (run->parsed()) return cmd_run(options, out, err);
  if (render_command->parsed()) return cmd_render(options, out, err);
  if (export_command->parsed()) return cmd_export(options, out, err);
  return cmd_bench(options, out, err);
}

}  // namespace luagfx
