#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "luagfx/source_span.hpp"

namespace luagfx::ast {

struct Expr;
struct Stat;
using ExprPtr = std::unique_ptr<Expr>;
using ExprList = std::vector<ExprPtr>;

enum class BinaryOp {
  Or, And,
  Eq, NotEq, Less, LessEq, Greater, GreaterEq,
  BitOr, BitXor, BitAnd, ShiftLeft, ShiftRight,
  Concat,
  Add, Sub, Mul, Div, Mod,
  Pow,
};

enum class UnaryOp { Neg, Not, Len, BitNot };

const char* symbol(BinaryOp op);
const char* symbol(UnaryOp op);

struct Return {
  ExprList exprs;
  SourceSpan span;
};

/// A statement sequence with an optional trailing `return`. Also the top-level chunk.
struct Block {
  std::vector<Stat> stats;
  std::optional<Return> last_stat;
  SourceSpan span;
};

struct FunctionBody {
  std::string name;  // "" for anonymous functions
  std::vector<std::string> params;
  Block body;
  SourceSpan span;
};

// ---- expressions ----------------------------------------------------------

struct Literal {
  std::variant<std::monostate, bool, double, std::string> value;
};
struct Var {
  std::string name;
};
struct Index {
  ExprPtr base;
  ExprPtr key;
};
struct Field {
  ExprPtr base;
  std::string name;
};
struct Call {
  ExprPtr callee;
  ExprList args;
};
/// `( exp )`: truncates a multi-value call to its first result.
struct Paren {
  ExprPtr inner;
};
struct BinOp {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct UnOp {
  UnaryOp op;
  ExprPtr operand;
};
struct TableField {
  enum class Kind { Positional, Named, Keyed } kind;
  std::string name;  // Named
  ExprPtr key;       // Keyed
  ExprPtr value;
  SourceSpan span;
};
struct TableCtor {
  std::vector<TableField> fields;
};
struct FunctionExpr {
  std::shared_ptr<const FunctionBody> function;
};

struct Expr {
  using Node = std::variant<Literal, Var, Index, Field, Call, Paren, BinOp, UnOp, TableCtor, FunctionExpr>;
  Node node;
  SourceSpan span;
};

// ---- statements -----------------------------------------------------------

struct LocalDecl {
  std::vector<std::string> names;
  ExprList exprs;
};
struct Assign {
  ExprList targets;  // each a Var, Index or Field
  ExprList exprs;
};
struct CallStat {
  ExprPtr call;
};
struct While {
  ExprPtr cond;
  Block body;
};
struct IfArm {
  ExprPtr cond;
  Block body;
};
struct If {
  std::vector<IfArm> arms;  // never empty
  std::optional<Block> else_body;
};
struct NumericFor {
  std::string name;
  ExprPtr start;
  ExprPtr stop;
  ExprPtr step;  // a synthesized literal 1 when the source omits it
  Block body;
};
struct Repeat {
  Block body;
  ExprPtr cond;
};
struct FunctionDecl {
  std::string name;
  bool is_local = false;
  std::shared_ptr<const FunctionBody> function;
};
struct Break {};

struct Stat {
  using Node = std::variant<LocalDecl, Assign, CallStat, While, If, NumericFor, Repeat, FunctionDecl, Break>;
  Node node;
  SourceSpan span;
};

/// Structural equality, ignoring nothing: spans are compared too.
bool equal(const Block& a, const Block& b);

}  // namespace luagfx::ast
