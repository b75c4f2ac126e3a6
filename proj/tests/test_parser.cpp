#include <doctest.h>

#include <random>

#include "ast_walk.hpp"
#include "luagfx/parser.hpp"
#include "luagfx/value.hpp"
#include "oracles.hpp"

using namespace luagfx;
using namespace luagfx::ast;

namespace {

const Expr& only_expression(const Chunk& chunk) {
  REQUIRE(chunk.stats.size() == 1);
  const auto* local = std::get_if<LocalDecl>(&chunk.stats[0].node);
  REQUIRE(local != nullptr);
  REQUIRE(local->exprs.size() == 1);
  return *local->exprs[0];
}

const Expr& expression(const std::string& text) {
  static std::vector<Chunk> keep;
  keep.push_back(parse_source("local e = " + text));
  return only_expression(keep.back());
}

// Fully parenthesized rendering of an expression, for precedence checks.
std::string shape(const Expr& e) {
  if (const auto* lit = std::get_if<Literal>(&e.node)) {
    if (const auto* d = std::get_if<double>(&lit->value)) return format_number(*d);
    if (const auto* s = std::get_if<std::string>(&lit->value)) return "'" + *s + "'";
    if (const auto* b = std::get_if<bool>(&lit->value)) return *b ? "true" : "false";
    return "nil";
  }
  if (const auto* var = std::get_if<Var>(&e.node)) return var->name;
  if (const auto* bin = std::get_if<BinOp>(&e.node)) {
    return "(" + shape(*bin->lhs) + " " + symbol(bin->op) + " " + shape(*bin->rhs) + ")";
  }
  if (const auto* un = std::get_if<UnOp>(&e.node)) return std::string("(") + symbol(un->op) + " " + shape(*un->operand) + ")";
  if (const auto* paren = std::get_if<Paren>(&e.node)) return shape(*paren->inner);
  if (const auto* call = std::get_if<Call>(&e.node)) return shape(*call->callee) + "(...)";
  if (const auto* field = std::get_if<Field>(&e.node)) return shape(*field->base) + "." + field->name;
  if (const auto* index = std::get_if<Index>(&e.node)) return shape(*index->base) + "[" + shape(*index->key) + "]";
  return "?";
}

int parse_error_line(const std::string& source) {
  try {
    parse_source(source);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("a single call statement") {
  Chunk chunk = parse_source("DrawCube(\"triangles\")");
  REQUIRE(chunk.stats.size() == 1);
  const auto* stat = std::get_if<CallStat>(&chunk.stats[0].node);
  REQUIRE(stat != nullptr);
  const auto& call = std::get<Call>(stat->call->node);
  CHECK(std::get<Var>(call.callee->node).name == "DrawCube");
  REQUIRE(call.args.size() == 1);
  CHECK(std::get<std::string>(std::get<Literal>(call.args[0]->node).value) == "triangles");
  CHECK_FALSE(chunk.last_stat.has_value());
}

TEST_CASE("standard precedence") {
  CHECK(shape(expression("1 + 2 * 3")) == "(1 + (2 * 3))");
  CHECK(shape(expression("(1 + 2) * 3")) == "((1 + 2) * 3)");
  CHECK(shape(expression("2 ^ 3 ^ 2")) == "(2 ^ (3 ^ 2))");
  CHECK(shape(expression("a .. b .. c")) == "(a .. (b .. c))");
  CHECK(shape(expression("a - b - c")) == "((a - b) - c)");
  CHECK(shape(expression("-a ^ 2")) == "(- (a ^ 2))");
  CHECK(shape(expression("not a == b")) == "((not a) == b)");
  CHECK(shape(expression("a or b and c")) == "(a or (b and c))");
  CHECK(shape(expression("a < b == c")) == "((a < b) == c)");
  CHECK(shape(expression("a | b ~ c & d")) == "(a | (b ~ (c & d)))");
  CHECK(shape(expression("a << b + c")) == "(a << (b + c))");
  CHECK(shape(expression("a .. b == c")) == "((a .. b) == c)");
  CHECK(shape(expression("1 + 2 .. 3")) == "((1 + 2) .. 3)");
  CHECK(shape(expression("#t * 2 % 3")) == "(((# t) * 2) % 3)");
  CHECK(shape(expression("~a & b")) == "((~ a) & b)");
  CHECK(shape(expression("a.b[c](d)")) == "a.b[c](...)");
}

TEST_CASE("numeric for with default step") {
  Chunk chunk = parse_source("for i = 1, 10 do x = x + i end");
  REQUIRE(chunk.stats.size() == 1);
  const auto& loop = std::get<NumericFor>(chunk.stats[0].node);
  CHECK(loop.name == "i");
  CHECK(std::get<double>(std::get<Literal>(loop.start->node).value) == 1);
  CHECK(std::get<double>(std::get<Literal>(loop.stop->node).value) == 10);
  CHECK(std::get<double>(std::get<Literal>(loop.step->node).value) == 1);
  CHECK(loop.body.stats.size() == 1);
}

TEST_CASE("statement forms") {
  Chunk chunk = parse_source(R"(
local a, b = 1, 2
a, b = b, a
f(a)
while a do break end
if a then elseif b then else end
for i = 1, 2, 3 do end
repeat until true
function g(x, y) return x end
local function h() end
return a, b
)");
  REQUIRE(chunk.stats.size() == 9);
  CHECK(std::holds_alternative<LocalDecl>(chunk.stats[0].node));
  CHECK(std::get<Assign>(chunk.stats[1].node).targets.size() == 2);
  CHECK(std::holds_alternative<CallStat>(chunk.stats[2].node));
  CHECK(std::holds_alternative<While>(chunk.stats[3].node));
  const auto& branch = std::get<If>(chunk.stats[4].node);
  CHECK(branch.arms.size() == 2);
  CHECK(branch.else_body.has_value());
  CHECK(std::holds_alternative<NumericFor>(chunk.stats[5].node));
  CHECK(std::holds_alternative<Repeat>(chunk.stats[6].node));
  const auto& decl = std::get<FunctionDecl>(chunk.stats[7].node);
  CHECK(decl.name == "g");
  CHECK_FALSE(decl.is_local);
  CHECK(decl.function->params == std::vector<std::string>{"x", "y"});
  CHECK(std::get<FunctionDecl>(chunk.stats[8].node).is_local);
  REQUIRE(chunk.last_stat.has_value());
  CHECK(chunk.last_stat->exprs.size() == 2);
}

TEST_CASE("table constructors") {
  const Expr& e = expression("{1, x = 2; [3] = 4, 5,}");
  const auto& table = std::get<TableCtor>(e.node);
  REQUIRE(table.fields.size() == 4);
  CHECK(table.fields[0].kind == TableField::Kind::Positional);
  CHECK(table.fields[1].kind == TableField::Kind::Named);
  CHECK(table.fields[1].name == "x");
  CHECK(table.fields[2].kind == TableField::Kind::Keyed);
  CHECK(table.fields[3].kind == TableField::Kind::Positional);
}

TEST_CASE("syntax errors report their line") {
  CHECK(parse_error_line("local = 3") == 1);
  CHECK(parse_error_line("x = 1\nif x then\n") == 3);
  CHECK(parse_error_line("x = 1\n\nlocal function () end") == 3);
  CHECK(parse_error_line("break") == 1);
  CHECK(parse_error_line("while true do\n  local f = function() break end\nend") == 2);
  CHECK(parse_error_line("return 1\nx = 2") == 2);
  CHECK(parse_error_line("x.y() = 3") == 1);
  CHECK(parse_error_line("(x) = 3") == 1);
  CHECK(parse_error_line("x") == 1);
  CHECK(parse_error_line("a:b()") == 1);
  CHECK(parse_error_line("for k, v in t do end") == 1);
}

TEST_CASE("error carries the expected token set") {
  try {
    parse_source("while x do\n  y = 1\n");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    bool wants_end = false;
    for (const auto& item : e.expected()) wants_end = wants_end || item == "'end'";
    CHECK(wants_end);
  }
}

TEST_CASE("error line fidelity across the negative corpus") {
  for (const auto& path : testdata::scripts("negative")) {
    std::string source = testdata::read_file(path);
    int expected = testdata::expected_error_line(source);
    REQUIRE_MESSAGE(expected > 0, path.filename().string());
    CHECK_MESSAGE(parse_error_line(source) == expected, path.filename().string());
  }
}

TEST_CASE("span containment and determinism over the corpus") {
  for (const char* dir : {"grammar", "oracle", "scenes"}) {
    for (const auto& path : testdata::scripts(dir)) {
      std::string source = testdata::read_file(path);
      Chunk first = parse_source(source);
      Chunk second = parse_source(source);
      CHECK_MESSAGE(equal(first, second), path.filename().string());
      CHECK_MESSAGE(astwalk::containment_violations(first) == 0, path.filename().string());
      CHECK(first.span.byte_offset == 0);
      CHECK(first.span.end() <= source.size());
    }
  }
}

TEST_CASE("random token streams terminate with a chunk or a ParseError") {
  std::mt19937 rng(99);
  const std::vector<std::string> pieces{"local", "x", "y", "=", "1", "(", ")", "{", "}", "[", "]", ",", "end",
                                        "do", "while", "if", "then", "else", "elseif", "for", "repeat", "until",
                                        "function", "return", "break", "+", "..", "-", "not", "#", ".", ";", "'s'",
                                        "nil", "true", "and", "or", "^", "==", "<"};
  int parsed = 0, rejected = 0;
  for (int round = 0; round < 5000; ++round) {
    std::string source;
    int count = 1 + static_cast<int>(rng() % 25);
    for (int i = 0; i < count; ++i) source += pieces[rng() % pieces.size()] + " ";
    try {
      parse_source(source);
      ++parsed;
    } catch (const ParseError& e) {
      CHECK(e.span().byte_offset <= source.size());
      ++rejected;
    }
  }
  CHECK(parsed + rejected == 5000);
  CHECK(rejected > 0);
}

TEST_CASE("nesting limits fail cleanly") {
  std::string deep(500, '(');
  deep = "x = " + deep + "1" + std::string(500, ')');
  CHECK(parse_error_line(deep) == 1);
  std::string chain = "x = 1";
  for (int i = 0; i < 5000; ++i) chain += " + 1";
  CHECK(parse_error_line(chain) == 1);
  std::string moderate = "x = " + std::string(50, '(') + "1" + std::string(50, ')');
  CHECK(parse_error_line(moderate) == -1);
}
