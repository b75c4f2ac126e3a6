#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "luagfx/codegen.hpp"
#include "luagfx/interpreter.hpp"
#include "luagfx/scene.hpp"

namespace luagfx {

enum class Status { Ok, SyntaxError, RuntimeError };

std::string_view to_string(Status status);

/// Outcome of parsing and evaluating one script.
struct Interpretation {
  Status status = Status::Ok;
  int line = 0;  // 1-based line of the error; 0 when status is Ok
  std::string message;
  std::vector<std::string> console;
  std::optional<Scene> scene;  // present exactly when status is Ok
};

/// Tokenizes, parses and evaluates `source` in a fresh session.
Interpretation interpret(std::string_view source, const AssetResolver& assets = {},
                         InterpreterOptions options = {});

/// Request/response form of interpret: a JSON object with "status", "line", "message",
/// "console" and, on success, "scene" holding the canonical scene document.
std::string interpret_document(std::string_view source,
                               const std::map<std::string, std::string, std::less<>>& assets = {});

struct Export {
  Interpretation interpretation;
  std::vector<std::uint8_t> archive;  // empty unless interpretation succeeded
};

/// Interprets and, on success, packages the scene as the zipped web template.
Export export_archive(std::string_view source, const AssetResolver& assets = {});

/// Bytes-only export for callers holding assets in memory; empty on any error.
std::vector<std::uint8_t> export_document(std::string_view source,
                                          const std::map<std::string, std::string, std::less<>>& assets = {});

}  // namespace luagfx
