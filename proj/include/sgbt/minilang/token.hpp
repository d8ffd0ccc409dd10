#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sgbt/minilang/lang.hpp"

namespace sgbt::minilang {

enum class TokenKind { Keyword, Identifier, IntLiteral, Operator, Punct, Indent, Dedent, Word };

std::string_view to_string(TokenKind kind) noexcept;

struct Token {
  TokenKind kind = TokenKind::Word;
  std::string text;

  bool operator==(const Token&) const = default;
};

/// Layout token texts. In P these words are reserved and lex as layout.
inline constexpr std::string_view kIndentText = "indent";
inline constexpr std::string_view kDedentText = "dedent";

struct TokenSeq {
  Lang lang = Lang::J;
  std::vector<Token> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
  std::vector<std::string> texts() const;

  bool operator==(const TokenSeq&) const = default;
};

bool is_keyword(std::string_view text, Lang lang) noexcept;
bool is_operator(std::string_view text) noexcept;
bool is_punct(std::string_view text, Lang lang) noexcept;
/// Structural vocabulary of the pivot language (everything except names and numbers).
bool is_pivot_word(std::string_view text) noexcept;

/// Kind that `text` has in `lang`. Texts outside the language inventory (e.g.
/// a brace copied into P by an untrained model) get TokenKind::Word.
TokenKind classify(std::string_view text, Lang lang) noexcept;

/// Builds a TokenSeq from token texts, classifying each under `lang`.
TokenSeq make_seq(Lang lang, const std::vector<std::string>& texts);

/// Canonical source text: single spaces for J and Pivot; one statement per line
/// with 4-space indentation for P. Falls back to the single-line form (layout
/// tokens spelled as words) when a P sequence has no consistent layout.
std::string render_text(const TokenSeq& seq);

/// Lossless single-line form: token texts joined by single spaces.
std::string flat_text(const TokenSeq& seq);
/// Inverse of flat_text: splits on spaces and classifies each text under `lang`.
TokenSeq from_flat(std::string_view text, Lang lang);

}  // namespace sgbt::minilang
