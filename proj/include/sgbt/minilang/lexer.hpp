#pragma once

#include <string_view>

#include "sgbt/minilang/token.hpp"

namespace sgbt::minilang {

/// Tokenizes source text. P synthesizes indent/dedent tokens from leading
/// spaces (unit of 4, tabs rejected) and also accepts the reserved words
/// `indent` / `dedent` written inline. Throws LexError.
TokenSeq lex(std::string_view source, Lang lang);

}  // namespace sgbt::minilang
