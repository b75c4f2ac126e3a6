#include "luagfx/parser.hpp"

#include <utility>

namespace luagfx {
namespace {

using namespace ast;

constexpr int kMaxSyntaxLevels = 200;
constexpr int kMaxChainLength = 1000;
constexpr int kUnaryPriority = 12;

struct Priority {
  int left;
  int right;
};

std::optional<std::pair<BinaryOp, Priority>> binary_operator(TokenKind kind) {
  switch (kind) {
    case TokenKind::Or: return {{BinaryOp::Or, {1, 1}}};
    case TokenKind::And: return {{BinaryOp::And, {2, 2}}};
    case TokenKind::Eq: return {{BinaryOp::Eq, {3, 3}}};
    case TokenKind::NotEq: return {{BinaryOp::NotEq, {3, 3}}};
    case TokenKind::Less: return {{BinaryOp::Less, {3, 3}}};
    case TokenKind::LessEq: return {{BinaryOp::LessEq, {3, 3}}};
    case TokenKind::Greater: return {{BinaryOp::Greater, {3, 3}}};
    case TokenKind::GreaterEq: return {{BinaryOp::GreaterEq, {3, 3}}};
    case TokenKind::Pipe: return {{BinaryOp::BitOr, {4, 4}}};
    case TokenKind::Tilde: return {{BinaryOp::BitXor, {5, 5}}};
    case TokenKind::Amp: return {{BinaryOp::BitAnd, {6, 6}}};
    case TokenKind::ShiftLeft: return {{BinaryOp::ShiftLeft, {7, 7}}};
    case TokenKind::ShiftRight: return {{BinaryOp::ShiftRight, {7, 7}}};
    case TokenKind::Concat: return {{BinaryOp::Concat, {9, 8}}};  // right associative
    case TokenKind::Plus: return {{BinaryOp::Add, {10, 10}}};
    case TokenKind::Minus: return {{BinaryOp::Sub, {10, 10}}};
    case TokenKind::Star: return {{BinaryOp::Mul, {11, 11}}};
    case TokenKind::Slash: return {{BinaryOp::Div, {11, 11}}};
    case TokenKind::Percent: return {{BinaryOp::Mod, {11, 11}}};
    case TokenKind::Caret: return {{BinaryOp::Pow, {14, 13}}};  // right associative
    default: return std::nullopt;
  }
}

std::optional<UnaryOp> unary_operator(TokenKind kind) {
  switch (kind) {
    case TokenKind::Minus: return UnaryOp::Neg;
    case TokenKind::Not: return UnaryOp::Not;
    case TokenKind::Hash: return UnaryOp::Len;
    case TokenKind::Tilde: return UnaryOp::BitNot;
    default: return std::nullopt;
  }
}

bool ends_block(TokenKind kind) {
  return kind == TokenKind::Eof || kind == TokenKind::End || kind == TokenKind::Else ||
         kind == TokenKind::Elseif || kind == TokenKind::Until;
}

template <typename Node>
ExprPtr make_expr(Node node, SourceSpan span) {
  return std::make_unique<Expr>(Expr{std::move(node), span});
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {
    if (tokens_.empty() || tokens_.back().kind != TokenKind::Eof) {
      throw std::invalid_argument("token stream must end with Eof");
    }
  }

  Chunk chunk() {
    Chunk out = block();
    if (current().kind != TokenKind::Eof) error_expected({TokenKind::Eof});
    // The top-level chunk owns the whole input, leading trivia included.
    out.span = SourceSpan{1, 1, 0, current().span.end()};
    return out;
  }

 private:
  // ---- token cursor -------------------------------------------------------

  const Token& current() const { return tokens_[pos_]; }
  const Token& lookahead() const { return tokens_[pos_ + 1 < tokens_.size() ? pos_ + 1 : pos_]; }
  bool check(TokenKind kind) const { return current().kind == kind; }

  const Token& advance() {
    const Token& tok = tokens_[pos_];
    if (tok.kind != TokenKind::Eof) ++pos_;
    last_ = tok.span;
    return tok;
  }

  bool accept(TokenKind kind) {
    if (!check(kind)) return false;
    advance();
    return true;
  }

  std::string near() const {
    return current().kind == TokenKind::Eof ? "<eof>" : "'" + current().lexeme + "'";
  }

  [[noreturn]] void error_expected(std::vector<TokenKind> kinds, const std::string& suffix = "") const {
    std::vector<std::string> names;
    for (TokenKind k : kinds) names.push_back(describe(k));
    std::string what = names.size() == 1 ? names.front() : "one of";
    if (names.size() > 1) {
      for (std::size_t i = 0; i < names.size(); ++i) what += (i ? ", " : " ") + names[i];
    }
    throw ParseError(what + " expected" + suffix + " near " + near(), current().span, std::move(names));
  }

  [[noreturn]] void error(const std::string& message, std::vector<std::string> expected = {}) const {
    throw ParseError(message + " near " + near(), current().span, std::move(expected));
  }

  const Token& expect(TokenKind kind, const std::string& suffix = "") {
    if (!check(kind)) error_expected({kind}, suffix);
    return advance();
  }

  // Closing keyword of a construct opened on another line gets Lua's "(to close ...)" hint.
  void expect_closing(TokenKind kind, TokenKind opener, int opener_line) {
    std::string suffix;
    if (current().span.line != opener_line) {
      suffix = " (to close " + describe(opener) + " at line " + std::to_string(opener_line) + ")";
    }
    expect(kind, suffix);
  }

  std::string name() { return expect(TokenKind::Name).lexeme; }

  struct Level {
    explicit Level(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxSyntaxLevels) parser.error("chunk has too many syntax levels");
    }
    ~Level() { --parser.depth_; }
    Parser& parser;
  };

  // ---- blocks and statements ----------------------------------------------

  // Span of an empty block: zero-length at the token that ends it.
  SourceSpan empty_span() const {
    SourceSpan s = current().span;
    s.length = 0;
    return s;
  }

  Block block() {
    Level level(*this);
    Block out;
    SourceSpan start = empty_span();
    bool any = false;
    while (!ends_block(current().kind)) {
      if (accept(TokenKind::Semicolon)) continue;
      if (check(TokenKind::Return)) {
        out.last_stat = return_stat();
        if (!any) start = out.last_stat->span;
        any = true;
        if (!ends_block(current().kind)) {
          error_expected({TokenKind::Eof, TokenKind::End, TokenKind::Else, TokenKind::Elseif, TokenKind::Until});
        }
        break;
      }
      out.stats.push_back(statement());
      if (!any) start = out.stats.back().span;
      any = true;
    }
    out.span = any ? join(start, last_) : start;
    return out;
  }

  Return return_stat() {
    SourceSpan start = advance().span;
    Return out;
    if (!ends_block(current().kind) && !check(TokenKind::Semicolon)) out.exprs = expr_list();
    accept(TokenKind::Semicolon);
    out.span = join(start, last_);
    return out;
  }

  template <typename Node>
  Stat finish(Node node, SourceSpan start) {
    return Stat{std::move(node), join(start, last_)};
  }

  Stat statement() {
    Level level(*this);
    SourceSpan start = current().span;
    switch (current().kind) {
      case TokenKind::Local: {
        advance();
        if (accept(TokenKind::Function)) {
          std::string fname = name();
          auto body = function_body(fname, start);
          return finish(FunctionDecl{fname, true, std::move(body)}, start);
        }
        LocalDecl decl;
        decl.names.push_back(name());
        while (accept(TokenKind::Comma)) decl.names.push_back(name());
        if (accept(TokenKind::Assign)) decl.exprs = expr_list();
        return finish(std::move(decl), start);
      }
      case TokenKind::While: {
        advance();
        While loop;
        loop.cond = expr();
        expect(TokenKind::Do);
        ++loop_depth_;
        loop.body = block();
        --loop_depth_;
        expect_closing(TokenKind::End, TokenKind::While, start.line);
        return finish(std::move(loop), start);
      }
      case TokenKind::If: {
        advance();
        If branch;
        do {
          IfArm arm;
          arm.cond = expr();
          expect(TokenKind::Then);
          arm.body = block();
          branch.arms.push_back(std::move(arm));
        } while (accept(TokenKind::Elseif));
        if (accept(TokenKind::Else)) branch.else_body = block();
        expect_closing(TokenKind::End, TokenKind::If, start.line);
        return finish(std::move(branch), start);
      }
      case TokenKind::For: {
        advance();
        NumericFor loop;
        loop.name = name();
        if (!check(TokenKind::Assign)) error_expected({TokenKind::Assign});
        advance();
        loop.start = expr();
        expect(TokenKind::Comma);
        loop.stop = expr();
        if (accept(TokenKind::Comma)) {
          loop.step = expr();
        } else {
          SourceSpan at = loop.stop->span;
          at.byte_offset = at.end();
          at.length = 0;
          loop.step = make_expr(Literal{1.0}, at);
        }
        expect(TokenKind::Do);
        ++loop_depth_;
        loop.body = block();
        --loop_depth_;
        expect_closing(TokenKind::End, TokenKind::For, start.line);
        return finish(std::move(loop), start);
      }
      case TokenKind::Repeat: {
        advance();
        Repeat loop;
        ++loop_depth_;
        loop.body = block();
        --loop_depth_;
        expect_closing(TokenKind::Until, TokenKind::Repeat, start.line);
        loop.cond = expr();
        return finish(std::move(loop), start);
      }
      case TokenKind::Function: {
        advance();
        std::string fname = name();
        auto body = function_body(fname, start);
        return finish(FunctionDecl{fname, false, std::move(body)}, start);
      }
      case TokenKind::Break: {
        if (loop_depth_ == 0) throw ParseError("break outside a loop", current().span);
        advance();
        return finish(Break{}, start);
      }
      default:
        return expression_statement();
    }
  }

  Stat expression_statement() {
    SourceSpan start = current().span;
    ExprPtr first = suffixed_expr();
    if (check(TokenKind::Assign) || check(TokenKind::Comma)) {
      Assign assign;
      assign.targets.push_back(std::move(first));
      while (accept(TokenKind::Comma)) assign.targets.push_back(suffixed_expr());
      for (const auto& target : assign.targets) {
        const auto& n = target->node;
        if (!std::holds_alternative<Var>(n) && !std::holds_alternative<Index>(n) && !std::holds_alternative<Field>(n)) {
          throw ParseError("cannot assign to this expression", target->span);
        }
      }
      expect(TokenKind::Assign);
      assign.exprs = expr_list();
      return finish(std::move(assign), start);
    }
    if (!std::holds_alternative<Call>(first->node)) error("syntax error");
    return finish(CallStat{std::move(first)}, start);
  }

  std::shared_ptr<const FunctionBody> function_body(std::string fname, SourceSpan start) {
    auto fn = std::make_shared<FunctionBody>();
    fn->name = std::move(fname);
    expect(TokenKind::LParen);
    if (!check(TokenKind::RParen)) {
      fn->params.push_back(name());
      while (accept(TokenKind::Comma)) fn->params.push_back(name());
    }
    expect(TokenKind::RParen);
    int saved_loops = loop_depth_;
    loop_depth_ = 0;
    fn->body = block();
    loop_depth_ = saved_loops;
    expect_closing(TokenKind::End, TokenKind::Function, start.line);
    fn->span = join(start, last_);
    return fn;
  }

  // ---- expressions ----------------------------------------------------------

  ExprList expr_list() {
    ExprList out;
    out.push_back(expr());
    while (accept(TokenKind::Comma)) out.push_back(expr());
    return out;
  }

  ExprPtr expr() { return sub_expr(0); }

  ExprPtr sub_expr(int limit) {
    Level level(*this);
    ExprPtr lhs;
    SourceSpan start = current().span;
    if (auto unary = unary_operator(current().kind)) {
      advance();
      ExprPtr operand = sub_expr(kUnaryPriority);
      lhs = make_expr(UnOp{*unary, std::move(operand)}, join(start, last_));
    } else {
      lhs = simple_expr();
    }
    int chain = 0;
    while (auto binary = binary_operator(current().kind)) {
      if (binary->second.left <= limit) break;
      if (++chain > kMaxChainLength) error("expression too long");
      advance();
      ExprPtr rhs = sub_expr(binary->second.right);
      SourceSpan span = join(lhs->span, rhs->span);
      lhs = make_expr(BinOp{binary->first, std::move(lhs), std::move(rhs)}, span);
    }
    return lhs;
  }

  ExprPtr simple_expr() {
    SourceSpan start = current().span;
    switch (current().kind) {
      case TokenKind::Number: {
        double value = *parse_numeral(advance().lexeme);
        return make_expr(Literal{value}, start);
      }
      case TokenKind::String:
        return make_expr(Literal{decode_string_literal(advance().lexeme)}, start);
      case TokenKind::Nil:
        advance();
        return make_expr(Literal{}, start);
      case TokenKind::True:
        advance();
        return make_expr(Literal{true}, start);
      case TokenKind::False:
        advance();
        return make_expr(Literal{false}, start);
      case TokenKind::LBrace:
        return table_constructor();
      case TokenKind::Function: {
        advance();
        auto body = function_body("", start);
        return make_expr(FunctionExpr{std::move(body)}, join(start, last_));
      }
      default:
        return suffixed_expr();
    }
  }

  ExprPtr primary_expr() {
    SourceSpan start = current().span;
    if (check(TokenKind::Name)) return make_expr(Var{advance().lexeme}, start);
    if (accept(TokenKind::LParen)) {
      ExprPtr inner = expr();
      expect(TokenKind::RParen);
      return make_expr(Paren{std::move(inner)}, join(start, last_));
    }
    error("unexpected symbol", {describe(TokenKind::Name), describe(TokenKind::LParen)});
  }

  ExprPtr suffixed_expr() {
    SourceSpan start = current().span;
    ExprPtr e = primary_expr();
    int chain = 0;
    while (true) {
      switch (current().kind) {
        case TokenKind::Dot: {
          advance();
          std::string field = name();
          e = make_expr(Field{std::move(e), std::move(field)}, join(start, last_));
          break;
        }
        case TokenKind::LBracket: {
          advance();
          ExprPtr key = expr();
          expect(TokenKind::RBracket);
          e = make_expr(Index{std::move(e), std::move(key)}, join(start, last_));
          break;
        }
        case TokenKind::LParen: {
          advance();
          ExprList args;
          if (!check(TokenKind::RParen)) args = expr_list();
          expect(TokenKind::RParen);
          e = make_expr(Call{std::move(e), std::move(args)}, join(start, last_));
          break;
        }
        default:
          return e;
      }
      if (++chain > kMaxChainLength) error("expression too long");
    }
  }

  ExprPtr table_constructor() {
    SourceSpan start = expect(TokenKind::LBrace).span;
    TableCtor table;
    while (!check(TokenKind::RBrace)) {
      TableField field;
      SourceSpan field_start = current().span;
      if (check(TokenKind::LBracket)) {
        advance();
        field.kind = TableField::Kind::Keyed;
        field.key = expr();
        expect(TokenKind::RBracket);
        expect(TokenKind::Assign);
        field.value = expr();
      } else if (check(TokenKind::Name) && lookahead().kind == TokenKind::Assign) {
        field.kind = TableField::Kind::Named;
        field.name = advance().lexeme;
        advance();
        field.value = expr();
      } else {
        field.kind = TableField::Kind::Positional;
        field.value = expr();
      }
      field.span = join(field_start, last_);
      table.fields.push_back(std::move(field));
      if (!accept(TokenKind::Comma) && !accept(TokenKind::Semicolon)) break;
    }
    if (!check(TokenKind::RBrace)) {
      error_expected({TokenKind::RBrace, TokenKind::Comma, TokenKind::Semicolon});
    }
    advance();
    return make_expr(std::move(table), join(start, last_));
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
  SourceSpan last_{};
  int depth_ = 0;
  int loop_depth_ = 0;
};

}  // namespace

Chunk parse(const std::vector<Token>& tokens) { return Parser(tokens).chunk(); }

Chunk parse_source(std::string_view source) { return parse(tokenize(source)); }

}  // namespace luagfx
