#include "luagfx/ast.hpp"

namespace luagfx::ast {

const char* symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Or: return "or";
    case BinaryOp::And: return "and";
    case BinaryOp::Eq: return "==";
    case BinaryOp::NotEq: return "~=";
    case BinaryOp::Less: return "<";
    case BinaryOp::LessEq: return "<=";
    case BinaryOp::Greater: return ">";
    case BinaryOp::GreaterEq: return ">=";
    case BinaryOp::BitOr: return "|";
    case BinaryOp::BitXor: return "~";
    case BinaryOp::BitAnd: return "&";
    case BinaryOp::ShiftLeft: return "<<";
    case BinaryOp::ShiftRight: return ">>";
    case BinaryOp::Concat: return "..";
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Pow: return "^";
  }
  return "?";
}

const char* symbol(UnaryOp op) {
  switch (op) {
    case UnaryOp::Neg: return "-";
    case UnaryOp::Not: return "not";
    case UnaryOp::Len: return "#";
    case UnaryOp::BitNot: return "~";
  }
  return "?";
}

namespace {

bool equal(const Expr& a, const Expr& b);

bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return !a && !b;
  return equal(*a, *b);
}

bool equal(const ExprList& a, const ExprList& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equal(a[i], b[i])) return false;
  }
  return true;
}

bool equal(const FunctionBody& a, const FunctionBody& b) {
  return a.name == b.name && a.params == b.params && a.span == b.span && ast::equal(a.body, b.body);
}

bool equal(const Expr& a, const Expr& b) {
  if (a.span != b.span || a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Literal>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, Var>) {
          return lhs.name == rhs.name;
        } else if constexpr (std::is_same_v<T, Index>) {
          return equal(lhs.base, rhs.base) && equal(lhs.key, rhs.key);
        } else if constexpr (std::is_same_v<T, Field>) {
          return lhs.name == rhs.name && equal(lhs.base, rhs.base);
        } else if constexpr (std::is_same_v<T, Call>) {
          return equal(lhs.callee, rhs.callee) && equal(lhs.args, rhs.args);
        } else if constexpr (std::is_same_v<T, Paren>) {
          return equal(lhs.inner, rhs.inner);
        } else if constexpr (std::is_same_v<T, BinOp>) {
          return lhs.op == rhs.op && equal(lhs.lhs, rhs.lhs) && equal(lhs.rhs, rhs.rhs);
        } else if constexpr (std::is_same_v<T, UnOp>) {
          return lhs.op == rhs.op && equal(lhs.operand, rhs.operand);
        } else if constexpr (std::is_same_v<T, TableCtor>) {
          if (lhs.fields.size() != rhs.fields.size()) return false;
          for (std::size_t i = 0; i < lhs.fields.size(); ++i) {
            const auto& x = lhs.fields[i];
            const auto& y = rhs.fields[i];
            if (x.kind != y.kind || x.name != y.name || x.span != y.span || !equal(x.key, y.key) ||
                !equal(x.value, y.value)) {
              return false;
            }
          }
          return true;
        } else {
          return equal(*lhs.function, *rhs.function);
        }
      },
      a.node);
}


bool equal(const Stat& a, const Stat& b) {
  if (a.span != b.span || a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, LocalDecl>) {
          return lhs.names == rhs.names && equal(lhs.exprs, rhs.exprs);
        } else if constexpr (std::is_same_v<T, Assign>) {
          return equal(lhs.targets, rhs.targets) && equal(lhs.exprs, rhs.exprs);
        } else if constexpr (std::is_same_v<T, CallStat>) {
          return equal(lhs.call, rhs.call);
        } else if constexpr (std::is_same_v<T, While>) {
          return equal(lhs.cond, rhs.cond) && ast::equal(lhs.body, rhs.body);
        } else if constexpr (std::is_same_v<T, If>) {
          if (lhs.arms.size() != rhs.arms.size()) return false;
          for (std::size_t i = 0; i < lhs.arms.size(); ++i) {
            if (!equal(lhs.arms[i].cond, rhs.arms[i].cond) || !ast::equal(lhs.arms[i].body, rhs.arms[i].body)) {
              return false;
            }
          }
          if (lhs.else_body.has_value() != rhs.else_body.has_value()) return false;
          return !lhs.else_body || ast::equal(*lhs.else_body, *rhs.else_body);
        } else if constexpr (std::is_same_v<T, NumericFor>) {
          return lhs.name == rhs.name && equal(lhs.start, rhs.start) && equal(lhs.stop, rhs.stop) &&
                 equal(lhs.step, rhs.step) && ast::equal(lhs.body, rhs.body);
        } else if constexpr (std::is_same_v<T, Repeat>) {
          return ast::equal(lhs.body, rhs.body) && equal(lhs.cond, rhs.cond);
        } else if constexpr (std::is_same_v<T, FunctionDecl>) {
          return lhs.name == rhs.name && lhs.is_local == rhs.is_local && equal(*lhs.function, *rhs.function);
        } else {
          return true;
        }
      },
      a.node);
}

}  // namespace

bool equal(const Block& a, const Block& b) {
  if (a.span != b.span || a.stats.size() != b.stats.size()) return false;
  for (std::size_t i = 0; i < a.stats.size(); ++i) {
    if (!equal(a.stats[i], b.stats[i])) return false;
  }
  if (a.last_stat.has_value() != b.last_stat.has_value()) return false;
  return !a.last_stat || (a.last_stat->span == b.last_stat->span && equal(a.last_stat->exprs, b.last_stat->exprs));
}

}  // namespace luagfx::ast
