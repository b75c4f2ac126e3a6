#pragma once

#include <string_view>
#include <vector>

#include "luagfx/ast.hpp"
#include "luagfx/lexer.hpp"

namespace luagfx {

using Chunk = ast::Block;

/// Builds the syntax tree for a token stream produced by tokenize(). The first syntax
/// error is thrown as ParseError; no recovery is attempted.
Chunk parse(const std::vector<Token>& tokens);

/// tokenize() followed by parse().
Chunk parse_source(std::string_view source);

}  // namespace luagfx
