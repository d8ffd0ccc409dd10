#include "sgbt/minilang/token.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "sgbt/error.hpp"
#include "sgbt/minilang/lexer.hpp"

namespace sgbt::minilang {
namespace {

constexpr std::array kJKeywords = {std::string_view("func"), std::string_view("let"),
                                   std::string_view("if"),   std::string_view("else"),
                                   std::string_view("while"), std::string_view("return"),
                                   std::string_view("abs"),  std::string_view("min"),
                                   std::string_view("max")};
constexpr std::array kPKeywords = {std::string_view("def"),   std::string_view("if"),
                                   std::string_view("else"),  std::string_view("while"),
                                   std::string_view("return"), std::string_view("abs"),
                                   std::string_view("min"),   std::string_view("max")};
constexpr std::array kOperators = {
    std::string_view("+"),  std::string_view("-"),  std::string_view("*"),  std::string_view("/"),
    std::string_view("%"),  std::string_view("<"),  std::string_view("<="), std::string_view(">"),
    std::string_view(">="), std::string_view("=="), std::string_view("!="), std::string_view("=")};
constexpr std::array kPivotWords = {
    std::string_view("function"), std::string_view("with"),    std::string_view("and"),
    std::string_view("begin"),    std::string_view("end"),     std::string_view("set"),
    std::string_view("to"),       std::string_view("give"),    std::string_view("plus"),
    std::string_view("minus"),    std::string_view("times"),   std::string_view("over"),
    std::string_view("rem"),      std::string_view("less"),    std::string_view("greater"),
    std::string_view("same"),     std::string_view("differ"),  std::string_view("when"),
    std::string_view("otherwise"), std::string_view("repeat"), std::string_view("while"),
    std::string_view("open"),     std::string_view("close"),   std::string_view("abs"),
    std::string_view("min"),      std::string_view("max")};

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& set, std::string_view text) {
  return std::find(set.begin(), set.end(), text) != set.end();
}

bool all_digits(std::string_view text) {
  return !text.empty() &&
         std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); });
}

bool is_identifier(std::string_view text) {
  if (text.empty()) return false;
  const auto first = static_cast<unsigned char>(text.front());
  if (!(std::isalpha(first) || first == '_')) return false;
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

// Statement-initial tokens get their own line when rendering P.
bool starts_p_statement(const std::vector<Token>& tokens, std::size_t i) {
  const auto& t = tokens[i];
  if (t.kind == TokenKind::Keyword)
    return t.text == "if" || t.text == "while" || t.text == "return" || t.text == "else" ||
           t.text == "def";
  return t.kind == TokenKind::Identifier && i + 1 < tokens.size() && tokens[i + 1].text == "=";
}

std::string render_p_layout(const TokenSeq& seq, bool& ok) {
  std::string out;
  int depth = 0;
  bool newline = false;
  ok = true;
  for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
    const auto& t = seq.tokens[i];
    if (t.kind == TokenKind::Indent) {
      ++depth;
      newline = true;
      continue;
    }
    if (t.kind == TokenKind::Dedent) {
      --depth;
      newline = true;
      if (depth < 0) ok = false;
      continue;
    }
    if (!out.empty() && starts_p_statement(seq.tokens, i)) newline = true;
    if (newline && !out.empty()) {
      out += '\n';
      out.append(static_cast<std::size_t>(std::max(depth, 0)) * 4, ' ');
    } else if (!out.empty()) {
      out += ' ';
    } else if (depth != 0) {
      ok = false;
    }
    newline = false;
    out += t.text;
  }
  return out;
}

}  // namespace

std::string_view to_string(TokenKind kind) noexcept {
  switch (kind) {
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::IntLiteral: return "int";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punct: return "punct";
    case TokenKind::Indent: return "indent";
    case TokenKind::Dedent: return "dedent";
    case TokenKind::Word: return "word";
  }
  return "?";
}

std::vector<std::string> TokenSeq::texts() const {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.text);
  return out;
}

bool is_keyword(std::string_view text, Lang lang) noexcept {
  switch (lang) {
    case Lang::J: return contains(kJKeywords, text);
    case Lang::P: return contains(kPKeywords, text);
    case Lang::Pivot: return false;
  }
  return false;
}

bool is_operator(std::string_view text) noexcept { return contains(kOperators, text); }

bool is_punct(std::string_view text, Lang lang) noexcept {
  if (text == "(" || text == ")" || text == ",") return lang != Lang::Pivot;
  if (text == "{" || text == "}" || text == ";") return lang == Lang::J;
  if (text == ":") return lang == Lang::P;
  return false;
}

bool is_pivot_word(std::string_view text) noexcept { return contains(kPivotWords, text); }

TokenKind classify(std::string_view text, Lang lang) noexcept {
  if (lang == Lang::Pivot) return TokenKind::Word;
  if (lang == Lang::P) {
    if (text == kIndentText) return TokenKind::Indent;
    if (text == kDedentText) return TokenKind::Dedent;
  }
  if (is_keyword(text, lang)) return TokenKind::Keyword;
  if (all_digits(text)) return TokenKind::IntLiteral;
  if (is_identifier(text)) return TokenKind::Identifier;
  if (is_operator(text)) return TokenKind::Operator;
  if (is_punct(text, lang)) return TokenKind::Punct;
  return TokenKind::Word;
}

TokenSeq make_seq(Lang lang, const std::vector<std::string>& texts) {
  TokenSeq seq{lang, {}};
  seq.tokens.reserve(texts.size());
  for (const auto& t : texts) seq.tokens.push_back(Token{classify(t, lang), t});
  return seq;
}

std::string flat_text(const TokenSeq& seq) {
  std::string out;
  for (const auto& t : seq.tokens) {
    if (!out.empty()) out += ' ';
    out += t.text;
  }
  return out;
}

TokenSeq from_flat(std::string_view text, Lang lang) {
  std::vector<std::string> texts;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    if (i > start) texts.emplace_back(text.substr(start, i - start));
  }
  return make_seq(lang, texts);
}

std::string render_text(const TokenSeq& seq) {
  if (seq.lang != Lang::P) return flat_text(seq);
  bool ok = false;
  std::string layout = render_p_layout(seq, ok);
  if (ok) {
    try {
      if (lex(layout, Lang::P) == seq) return layout;
    } catch (const LexError&) {
    }
  }
  return flat_text(seq);
}

}  // namespace sgbt::minilang
