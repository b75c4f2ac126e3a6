#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "luagfx/source_span.hpp"

namespace luagfx {

enum class TokenKind {
  Name,
  Number,
  String,
  // keywords
  Local,
  While,
  Do,
  End,
  If,
  Then,
  Elseif,
  Else,
  For,
  Repeat,
  Until,
  Function,
  Return,
  Break,
  Nil,
  True,
  False,
  Or,
  And,
  Not,
  // operators
  Eq,       // ==
  NotEq,    // ~=
  GreaterEq,
  LessEq,
  Greater,
  Less,
  Pipe,     // |
  Tilde,    // ~
  Amp,      // &
  ShiftRight,
  ShiftLeft,
  Concat,   // ..
  Minus,
  Plus,
  Percent,
  Slash,
  Star,
  Caret,
  Hash,
  Assign,
  // delimiters
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  Semicolon,
  Dot,
  Colon,
  Eof,
};

struct Token {
  TokenKind kind;
  std::string lexeme;  // exact source slice; empty for Eof
  SourceSpan span;
};

/// Thrown by the lexer and parser. `expected` lists token descriptions the parser would have accepted.
class ParseError : public SourceError {
 public:
  ParseError(std::string message, SourceSpan span, std::vector<std::string> expected = {})
      : SourceError(std::move(message), span), expected_(std::move(expected)) {}

  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::vector<std::string> expected_;
};

/// Human-readable description of a token kind, e.g. "'end'" or "<name>".
std::string describe(TokenKind kind);

/// Splits source into tokens. The result always ends with a single Eof token whose span
/// sits at the end of input. Whitespace and comments are skipped.
std::vector<Token> tokenize(std::string_view source);

/// Parses a numeral the way the lexer accepts it (decimal, float with exponent, hex integer).
/// Leading and trailing whitespace is allowed, which makes this usable for string coercion.
std::optional<double> parse_numeral(std::string_view text);

/// Decodes the body of a quoted string token (quotes included in `lexeme`).
std::string decode_string_literal(std::string_view lexeme);

}  // namespace luagfx
