#include "luagfx/core.hpp"

#include "luagfx/parser.hpp"
#include "luagfx/scene_document.hpp"

namespace luagfx {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Ok: return "ok";
    case Status::SyntaxError: return "syntax_error";
    case Status::RuntimeError: return "runtime_error";
  }
  return "";
}

Interpretation interpret(std::string_view source, const AssetResolver& assets, InterpreterOptions options) {
  Interpretation result;
  Chunk chunk;
  try {
    chunk = parse_source(source);
  } catch (const ParseError& e) {
    result.status = Status::SyntaxError;
    result.line = e.line();
    result.message = e.message();
    return result;
  }
  Interpreter session(assets, options);
  try {
    EvalOutcome outcome = session.evaluate(chunk);
    result.console = std::move(outcome.console);
    result.scene = std::move(outcome.scene);
  } catch (const RuntimeError& e) {
    result.status = Status::RuntimeError;
    result.line = e.line();
    result.message = e.message();
    result.console = session.console();
  }
  return result;
}

std::string interpret_document(std::string_view source,
                               const std::map<std::string, std::string, std::less<>>& assets) {
  Interpretation result = interpret(source, map_resolver(assets));
  std::string out = "{\n  \"status\": " + quote_json(to_string(result.status));
  out += ",\n  \"line\": " + std::to_string(result.line);
  out += ",\n  \"message\": " + quote_json(result.message);
  out += ",\n  \"console\": [";
  for (std::size_t i = 0; i < result.console.size(); ++i) {
    out += i ? ", " : "";
    out += quote_json(result.console[i]);
  }
  out += "]";
  if (result.scene) {
    std::string document = serialize_scene(*result.scene);
    document.pop_back();
    out += ",\n  \"scene\": " + document;
  }
  out += "\n}\n";
  return out;
}

Export export_archive(std::string_view source, const AssetResolver& assets) {
  Export out;
  out.interpretation = interpret(source, assets);
  if (out.interpretation.scene) out.archive = package_archive(generate_template(*out.interpretation.scene));
  return out;
}

std::vector<std::uint8_t> export_document(std::string_view source,
                                          const std::map<std::string, std::string, std::less<>>& assets) {
  return export_archive(source, map_resolver(assets)).archive;
}

}  // namespace luagfx
