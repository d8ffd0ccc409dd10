#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sgbt/minilang/token.hpp"

namespace sgbt::seq2seq {

using minilang::TokenSeq;

inline constexpr std::string_view kBos = "<s>";
inline constexpr std::string_view kEos = "</s>";
inline constexpr std::string_view kTop = "<top>";

/// Coarse token class: "ID" for names, "LIT" for numbers, the text itself for
/// every fixed-vocabulary token of any language.
std::string token_class(std::string_view text);

/// What the model conditions on at one source position.
///   left/right  classes of the neighbouring tokens (BOS/EOS at the edges)
///   right2      class of the token after `right`; alignments often shift a
///               target word onto the token before the one it translates
///   cur         the token text
///   block       keyword of the innermost enclosing block (func, if, while,
///               when, ...); tokens between a block keyword and its opener
///               already see that keyword
struct Context {
  std::string left;
  std::string cur;
  std::string right;
  std::string right2;
  std::string block;

  bool operator==(const Context&) const = default;
};

/// One context per source token.
std::vector<Context> contexts(const TokenSeq& src);

/// The pseudo-position before the first token, where leading insertions attach.
Context bos_context(const TokenSeq& src);

}  // namespace sgbt::seq2seq
