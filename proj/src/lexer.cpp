#include "luagfx/lexer.hpp"

#include <array>
#include <cctype>
#include <cstdlib>
#include <cstdint>
#include <utility>

namespace luagfx {
namespace {

struct Keyword {
  std::string_view text;
  TokenKind kind;
};

constexpr std::array<Keyword, 20> kKeywords{{
    {"local", TokenKind::Local},   {"while", TokenKind::While},   {"do", TokenKind::Do},
    {"end", TokenKind::End},       {"if", TokenKind::If},         {"then", TokenKind::Then},
    {"elseif", TokenKind::Elseif}, {"else", TokenKind::Else},     {"for", TokenKind::For},
    {"repeat", TokenKind::Repeat}, {"until", TokenKind::Until},   {"function", TokenKind::Function},
    {"return", TokenKind::Return}, {"break", TokenKind::Break},   {"nil", TokenKind::Nil},
    {"true", TokenKind::True},     {"false", TokenKind::False},   {"or", TokenKind::Or},
    {"and", TokenKind::And},       {"not", TokenKind::Not},
}};

struct Symbol {
  std::string_view text;
  TokenKind kind;
};

// Longest lexemes first so that prefix matching picks "==" over "=".
constexpr std::array<Symbol, 31> kSymbols{{
    {"==", TokenKind::Eq},        {"~=", TokenKind::NotEq},      {">=", TokenKind::GreaterEq},
    {"<=", TokenKind::LessEq},    {">>", TokenKind::ShiftRight}, {"<<", TokenKind::ShiftLeft},
    {"..", TokenKind::Concat},    {">", TokenKind::Greater},     {"<", TokenKind::Less},
    {"|", TokenKind::Pipe},       {"~", TokenKind::Tilde},       {"&", TokenKind::Amp},
    {"-", TokenKind::Minus},      {"+", TokenKind::Plus},        {"%", TokenKind::Percent},
    {"/", TokenKind::Slash},      {"*", TokenKind::Star},        {"^", TokenKind::Caret},
    {"#", TokenKind::Hash},       {"=", TokenKind::Assign},      {"(", TokenKind::LParen},
    {")", TokenKind::RParen},     {"[", TokenKind::LBracket},    {"]", TokenKind::RBracket},
    {"{", TokenKind::LBrace},     {"}", TokenKind::RBrace},      {",", TokenKind::Comma},
    {";", TokenKind::Semicolon},  {".", TokenKind::Dot},         {":", TokenKind::Colon},
    {"", TokenKind::Eof},
}};

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view source) : src_(source) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_trivia();
      if (pos_ >= src_.size()) break;
      tokens.push_back(next_token());
    }
    tokens.push_back(Token{TokenKind::Eof, "", span_here(0)});
    return tokens;
  }

 private:
  SourceSpan span_here(std::size_t length) const {
    return SourceSpan{line_, static_cast<int>(pos_ - line_start_) + 1, pos_, length};
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  // Returns the level of a long bracket "[==[" starting at pos_ + offset, or -1.
  int long_bracket_level(std::size_t offset) const {
    if (peek(offset) != '[') return -1;
    std::size_t i = offset + 1;
    int level = 0;
    while (peek(i) == '=') {
      ++level;
      ++i;
    }
    return peek(i) == '[' ? level : -1;
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
        advance();
      } else if (c == '-' && peek(1) == '-') {
        skip_comment();
      } else {
        return;
      }
    }
  }

  void skip_comment() {
    SourceSpan start = span_here(2);
    pos_ += 2;
    int level = long_bracket_level(0);
    if (level < 0) {
      while (pos_ < src_.size() && peek() != '\n') advance();
      return;
    }
    pos_ += static_cast<std::size_t>(level) + 2;
    while (pos_ < src_.size()) {
      if (peek() == ']') {
        std::size_t i = 1;
        int closing = 0;
        while (peek(i) == '=') {
          ++closing;
          ++i;
        }
        if (closing == level && peek(i) == ']') {
          pos_ += i + 1;
          return;
        }
      }
      advance();
    }
    start.length = src_.size() - start.byte_offset;
    throw ParseError("unterminated long comment", start);
  }

  Token make(TokenKind kind, SourceSpan span) {
    return Token{kind, std::string(src_.substr(span.byte_offset, span.length)), span};
  }

  Token next_token() {
    char c = peek();
    SourceSpan start = span_here(0);
    if (is_name_start(c)) {
      std::size_t begin = pos_;
      while (pos_ < src_.size() && is_name_char(peek())) ++pos_;
      start.length = pos_ - begin;
      std::string_view text = src_.substr(begin, start.length);
      TokenKind kind = TokenKind::Name;
      for (const auto& kw : kKeywords) {
        if (kw.text == text) kind = kw.kind;
      }
      return make(kind, start);
    }
    if (is_digit(c) || (c == '.' && is_digit(peek(1)))) return number(start);
    if (c == '"' || c == '\'') return string(start);
    for (const auto& sym : kSymbols) {
      if (sym.text.empty()) break;
      if (src_.substr(pos_, sym.text.size()) == sym.text) {
        pos_ += sym.text.size();
        start.length = sym.text.size();
        return make(sym.kind, start);
      }
    }
    start.length = 1;
    std::string shown = std::isprint(static_cast<unsigned char>(c)) ? std::string(1, c) : "\\" + std::to_string(static_cast<unsigned char>(c));
    throw ParseError("unexpected symbol '" + shown + "'", start);
  }

  Token number(SourceSpan start) {
    // Greedy scan, then validate: "3..4" or "1e" become one malformed numeral.
    std::size_t begin = pos_;
    while (pos_ < src_.size()) {
      char c = peek();
      bool exponent = (c == 'e' || c == 'E') && !(pos_ > begin + 1 && (src_[begin + 1] == 'x' || src_[begin + 1] == 'X'));
      if (exponent && (peek(1) == '+' || peek(1) == '-')) {
        pos_ += 2;
      } else if (is_name_char(c) || c == '.') {
        ++pos_;
      } else {
        break;
      }
    }
    start.length = pos_ - begin;
    if (!parse_numeral(src_.substr(begin, start.length))) {
      throw ParseError("malformed number near '" + std::string(src_.substr(begin, start.length)) + "'", start);
    }
    return make(TokenKind::Number, start);
  }

  Token string(SourceSpan start) {
    char quote = peek();
    std::size_t begin = pos_;
    ++pos_;
    while (true) {
      if (pos_ >= src_.size() || peek() == '\n') {
        start.length = pos_ - begin;
        throw ParseError("unterminated string", start);
      }
      char c = peek();
      if (c == quote) {
        ++pos_;
        break;
      }
      if (c == '\\') {
        SourceSpan escape = span_here(2);
        char e = peek(1);
        if (e == 'n' || e == 't' || e == 'r' || e == '\\' || e == '"' || e == '\'') {
          pos_ += 2;
        } else if (is_digit(e)) {
          std::size_t i = 1;
          int value = 0;
          while (i <= 3 && is_digit(peek(i))) {
            value = value * 10 + (peek(i) - '0');
            ++i;
          }
          if (value > 255) {
            escape.length = i;
            throw ParseError("decimal escape too large", escape);
          }
          pos_ += i;
        } else {
          if (e == '\0' && pos_ + 1 >= src_.size()) escape.length = 1;
          throw ParseError("invalid escape sequence", escape);
        }
        continue;
      }
      ++pos_;
    }
    start.length = pos_ - begin;
    return make(TokenKind::String, start);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  int line_ = 1;
};

}  // namespace

std::string describe(TokenKind kind) {
  switch (kind) {
    case TokenKind::Name:
      return "<name>";
    case TokenKind::Number:
      return "<number>";
    case TokenKind::String:
      return "<string>";
    case TokenKind::Eof:
      return "<eof>";
    default:
      break;
  }
  for (const auto& kw : kKeywords) {
    if (kw.kind == kind) return "'" + std::string(kw.text) + "'";
  }
  for (const auto& sym : kSymbols) {
    if (sym.kind == kind) return "'" + std::string(sym.text) + "'";
  }
  return "<token>";
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

std::optional<double> parse_numeral(std::string_view text) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    // Only string coercion reaches here with a sign; the lexer never includes one.
    negative = text.front() == '-';
    text.remove_prefix(1);
    if (text.empty()) return std::nullopt;
  }

  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    std::uint64_t acc = 0;
    for (char c : text.substr(2)) {
      int digit;
      if (c >= '0' && c <= '9') {
        digit = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        digit = c - 'a' + 10;
      } else if (c >= 'A' && c <= 'F') {
        digit = c - 'A' + 10;
      } else {
        return std::nullopt;
      }
      acc = acc * 16 + static_cast<std::uint64_t>(digit);  // wraps like Lua
    }
    double value = static_cast<double>(static_cast<std::int64_t>(acc));
    return negative ? -value : value;
  }

  // digits [. digits] [(e|E) [+-] digits], at least one digit in the mantissa
  std::size_t i = 0;
  std::size_t mantissa_digits = 0;
  while (i < text.size() && is_digit(text[i])) {
    ++i;
    ++mantissa_digits;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && is_digit(text[i])) {
      ++i;
      ++mantissa_digits;
    }
  }
  if (mantissa_digits == 0) return std::nullopt;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < text.size() && is_digit(text[i])) {
      ++i;
      ++exp_digits;
    }
    if (exp_digits == 0) return std::nullopt;
  }
  if (i != text.size()) return std::nullopt;

  // strtod saturates to inf / 0 on overflow / underflow, matching Lua's numeral conversion.
  double value = std::strtod(std::string(text).c_str(), nullptr);
  return negative ? -value : value;
}

std::string decode_string_literal(std::string_view lexeme) {
  std::string out;
  if (lexeme.size() < 2) return out;
  std::string_view body = lexeme.substr(1, lexeme.size() - 2);
  out.reserve(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c != '\\' || i + 1 >= body.size()) {
      out.push_back(c);
      continue;
    }
    char e = body[++i];
    switch (e) {
      case 'n':
        out.push_back('\n');
        break;
      case 't':
        out.push_back('\t');
        break;
      case 'r':
        out.push_back('\r');
        break;
      default:
        if (is_digit(e)) {
          int value = 0;
          std::size_t n = 0;
          while (n < 3 && i < body.size() && is_digit(body[i])) {
            value = value * 10 + (body[i] - '0');
            ++i;
            ++n;
          }
          --i;
          out.push_back(static_cast<char>(value));
        } else {
          out.push_back(e);  // \\ \" \'
        }
    }
  }
  return out;
}

}  // namespace luagfx
