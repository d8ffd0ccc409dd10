#pragma once

#include <cstddef>

#include "sgbt/minilang/ast.hpp"
#include "sgbt/minilang/token.hpp"

namespace sgbt::minilang {

/// Parses exactly one function from a J or P token sequence and runs the
/// static binding check. Throws ParseError or UnboundVariable.
///
/// J: a `let` of an already bound name is accepted and parses to Let
/// (runtime semantics equal Assign). P: the first assignment of a name in
/// program order parses to Let, later ones to Assign.
Function parse(const TokenSeq& ts);

/// Parses one function starting at token `start` and returns the index one
/// past its last token. Used for multi-function files.
Function parse_function_at(const TokenSeq& ts, std::size_t start, std::size_t& end);

}  // namespace sgbt::minilang
