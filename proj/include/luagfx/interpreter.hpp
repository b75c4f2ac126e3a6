#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "luagfx/parser.hpp"
#include "luagfx/scene.hpp"
#include "luagfx/value.hpp"

namespace luagfx {

class RuntimeError : public SourceError {
 public:
  using SourceError::SourceError;
};

/// Looks up an asset (an OBJ file) by the name a script passes to DrawObject.
using AssetResolver = std::function<std::optional<std::string>(std::string_view name)>;

struct InterpreterOptions {
  std::uint64_t step_limit = 50'000'000;  // statement and expression visits
  int max_call_depth = 10'000;
};

struct EvalOutcome {
  Scene scene;
  std::vector<std::string> console;
};

/// One evaluation session: globals, console, builtins and the scene under construction.
/// A session evaluates exactly one chunk.
class Interpreter {
 public:
  explicit Interpreter(AssetResolver assets = {}, InterpreterOptions options = {});
  ~Interpreter();
  Interpreter(const Interpreter&) = delete;
  Interpreter& operator=(const Interpreter&) = delete;

  /// Runs the chunk and freezes the scene. Throws RuntimeError; console() keeps the
  /// output produced before the failure.
  EvalOutcome evaluate(const Chunk& chunk);

  /// Calls a function value with positional arguments.
  ValueList call_value(const Value& callee, std::span<const Value> args, const SourceSpan& at);

  const std::vector<std::string>& console() const { return console_; }
  void print_line(std::string line) { console_.push_back(std::move(line)); }

  void register_builtin(Builtin builtin);
  Value global(const std::string& name) const;

  SceneBuilder& scene_builder() { return builder_; }
  std::optional<std::string> resolve_asset(std::string_view name) const;
  /// Meshes loaded by DrawObject, cached by asset name for the session.
  std::map<std::string, std::shared_ptr<const Mesh>, std::less<>>& mesh_cache() { return meshes_; }

  std::uint64_t steps() const { return steps_; }
  /// Number of times evaluate() ran to completion; at most 1.
  int evaluations() const { return evaluations_; }

 private:
  enum class Flow { Normal, Break, Return };
  class Evaluator;
  friend class Evaluator;

  std::shared_ptr<Environment> new_scope(std::shared_ptr<Environment> parent);
  std::shared_ptr<Table> new_table();
  void maybe_prune();
  ValueList returned_;

  AssetResolver assets_;
  InterpreterOptions options_;
  std::shared_ptr<Environment> globals_;
  std::vector<std::string> console_;
  SceneBuilder builder_;
  std::map<std::string, std::shared_ptr<const Mesh>, std::less<>> meshes_;
  std::uint64_t steps_ = 0;
  int call_depth_ = 0;
  int evaluations_ = 0;
  bool started_ = false;
  // Closures capture their scope, so scopes and tables can form cycles; they are
  // tracked here and emptied when the session ends.
  std::vector<std::weak_ptr<Environment>> scopes_;
  std::vector<std::weak_ptr<Table>> tables_;
  std::size_t prune_at_ = 1024;
};

/// Adds the sixteen graphics builtins (DrawCube ... SpecularComponent).
void register_graphics_builtins(Interpreter& interpreter);

/// Resolver over an in-memory name -> bytes map.
AssetResolver map_resolver(std::map<std::string, std::string, std::less<>> assets);

/// Resolver over a directory; rejects absolute names and any ".." component.
AssetResolver directory_resolver(std::string directory);

}  // namespace luagfx
