#pragma once

#include "sgbt/minilang/ast.hpp"
#include "sgbt/minilang/token.hpp"

namespace sgbt::minilang {

/// Canonical token form of `fn` in `lang`. Parentheses appear only where
/// precedence or left-associativity requires them.
///
/// Pivot verbalization keeps operand order and word-maps every construct:
///   func/def -> function, params -> "with p and q", Let/Assign -> "set v to",
///   return -> give, if/else -> when/otherwise, while -> "repeat while",
///   blocks -> begin/end, ( ) , -> open close and, + - * / % -> plus minus
///   times over rem, < <= -> less, > >= -> greater, == -> same, != -> differ.
TokenSeq print(const Function& fn, Lang lang);

}  // namespace sgbt::minilang
