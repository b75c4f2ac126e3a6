#pragma once

#include <functional>
#include <set>
#include <string>
#include <variant>

#include "luagfx/ast.hpp"

namespace astwalk {

using namespace luagfx::ast;

// Calls `visit(kind, span, parent_span)` for every node under a block, depth first.
class Walker {
 public:
  using Visit = std::function<void(const std::string& kind, const luagfx::SourceSpan& span,
                                   const luagfx::SourceSpan& parent)>;

  explicit Walker(Visit visit) : visit_(std::move(visit)) {}

  void block(const Block& b, const luagfx::SourceSpan& parent) {
    visit_("Block", b.span, parent);
    for (const Stat& s : b.stats) stat(s, b.span);
    if (b.last_stat) {
      visit_("Return", b.last_stat->span, b.span);
      for (const auto& e : b.last_stat->exprs) expr(*e, b.last_stat->span);
    }
  }

  void function(const FunctionBody& f, const luagfx::SourceSpan& parent) {
    visit_("FunctionBody", f.span, parent);
    block(f.body, f.span);
  }

  void stat(const Stat& s, const luagfx::SourceSpan& parent) {
    const auto& sp = s.span;
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, LocalDecl>) {
            visit_("LocalDecl", sp, parent);
            for (const auto& e : n.exprs) expr(*e, sp);
          } else if constexpr (std::is_same_v<T, Assign>) {
            visit_("Assign", sp, parent);
            for (const auto& e : n.targets) expr(*e, sp);
            for (const auto& e : n.exprs) expr(*e, sp);
          } else if constexpr (std::is_same_v<T, CallStat>) {
            visit_("CallStat", sp, parent);
            expr(*n.call, sp);
          } else if constexpr (std::is_same_v<T, While>) {
            visit_("While", sp, parent);
            expr(*n.cond, sp);
            block(n.body, sp);
          } else if constexpr (std::is_same_v<T, If>) {
            visit_(n.arms.size() > 1 ? "IfElseif" : "If", sp, parent);
            for (const auto& arm : n.arms) {
              expr(*arm.cond, sp);
              block(arm.body, sp);
            }
            if (n.else_body) {
              visit_("Else", n.else_body->span, sp);
              block(*n.else_body, sp);
            }
          } else if constexpr (std::is_same_v<T, NumericFor>) {
            visit_("NumericFor", sp, parent);
            expr(*n.start, sp);
            expr(*n.stop, sp);
            expr(*n.step, sp);
            block(n.body, sp);
          } else if constexpr (std::is_same_v<T, Repeat>) {
            visit_("Repeat", sp, parent);
            block(n.body, sp);
            expr(*n.cond, sp);
          } else if constexpr (std::is_same_v<T, FunctionDecl>) {
            visit_(n.is_local ? "LocalFunctionDecl" : "FunctionDecl", sp, parent);
            function(*n.function, sp);
          } else {
            visit_("Break", sp, parent);
          }
        },
        s.node);
  }

  void expr(const Expr& e, const luagfx::SourceSpan& parent) {
    const auto& sp = e.span;
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Literal>) {
            visit_("Literal", sp, parent);
          } else if constexpr (std::is_same_v<T, Var>) {
            visit_("Var", sp, parent);
          } else if constexpr (std::is_same_v<T, Index>) {
            visit_("Index", sp, parent);
            expr(*n.base, sp);
            expr(*n.key, sp);
          } else if constexpr (std::is_same_v<T, Field>) {
            visit_("Field", sp, parent);
            expr(*n.base, sp);
          } else if constexpr (std::is_same_v<T, Call>) {
            visit_("Call", sp, parent);
            expr(*n.callee, sp);
            for (const auto& a : n.args) expr(*a, sp);
          } else if constexpr (std::is_same_v<T, Paren>) {
            visit_("Paren", sp, parent);
            expr(*n.inner, sp);
          } else if constexpr (std::is_same_v<T, BinOp>) {
            visit_(std::string("BinOp ") + symbol(n.op), sp, parent);
            expr(*n.lhs, sp);
            expr(*n.rhs, sp);
          } else if constexpr (std::is_same_v<T, UnOp>) {
            visit_(std::string("UnOp ") + symbol(n.op), sp, parent);
            expr(*n.operand, sp);
          } else if constexpr (std::is_same_v<T, TableCtor>) {
            visit_("TableCtor", sp, parent);
            for (const auto& f : n.fields) {
              visit_("TableField", f.span, sp);
              if (f.key) expr(*f.key, f.span);
              expr(*f.value, f.span);
            }
          } else {
            visit_("FunctionExpr", sp, parent);
            function(*n.function, sp);
          }
        },
        e.node);
  }

 private:
  Visit visit_;
};

/// Node kinds present in a chunk ("While", "BinOp ..", "UnOp -", ...).
inline std::set<std::string> kinds(const Block& chunk) {
  std::set<std::string> out;
  Walker walker([&](const std::string& kind, const luagfx::SourceSpan&, const luagfx::SourceSpan&) {
    out.insert(kind);
  });
  walker.block(chunk, chunk.span);
  return out;
}

/// Number of nodes whose span is not inside their parent's span.
inline int containment_violations(const Block& chunk) {
  int bad = 0;
  Walker walker([&](const std::string&, const luagfx::SourceSpan& span, const luagfx::SourceSpan& parent) {
    if (!parent.contains(span)) ++bad;
  });
  walker.block(chunk, chunk.span);
  return bad;
}

}  // namespace astwalk
