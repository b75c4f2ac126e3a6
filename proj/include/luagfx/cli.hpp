#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace luagfx {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kSyntaxError = 1;
inline constexpr int kRuntimeError = 2;
inline constexpr int kIoError = 3;
inline constexpr int kUsage = 64;
}  // namespace exit_code

struct BenchRow {
  int count = 0;  // spheres in the scene
  std::size_t triangles = 0;
  double parse_ms = 0;
  double evaluate_ms = 0;
  double first_frame_ms = 0;
  double second_frame_ms = 0;
  int evaluations = 0;  // times the script ran; 1 for every row
};

/// Script drawing `count` default spheres laid out on a square grid.
std::string sphere_bench_script(int count);

/// Parses and evaluates the sphere script once, then renders the stored scene twice.
BenchRow bench_spheres(int count, int width = 256, int height = 256, unsigned threads = 0);

std::string bench_json(const std::vector<BenchRow>& rows);
std::string bench_table(const std::vector<BenchRow>& rows);

/// Command-line entry point (run, render, export, bench). Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace luagfx
