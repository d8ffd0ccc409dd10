#include "sgbt/minilang/lexer.hpp"

#include <cctype>

#include "sgbt/error.hpp"

namespace sgbt::minilang {
namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Lexes one line segment of code tokens (no layout handling) into `out`.
void lex_code(std::string_view src, std::size_t base, Lang lang, std::vector<Token>& out) {
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\n' || c == '\r' || (c == '\t' && lang != Lang::P)) {
      ++i;
      continue;
    }
    if (c == '\t') throw LexError(base + i, "tab character");
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      const std::string_view word = src.substr(i, j - i);
      out.push_back(Token{classify(word, lang), std::string(word)});
      i = j;
      continue;
    }
    if (is_digit(c)) {
      std::size_t j = i;
      while (j < src.size() && is_digit(src[j])) ++j;
      if (j < src.size() && is_ident_start(src[j])) throw LexError(base + j, "malformed number");
      out.push_back(Token{TokenKind::IntLiteral, std::string(src.substr(i, j - i))});
      i = j;
      continue;
    }
    if (i + 1 < src.size()) {
      const std::string_view two = src.substr(i, 2);
      if (two == "<=" || two == ">=" || two == "==" || two == "!=") {
        out.push_back(Token{TokenKind::Operator, std::string(two)});
        i += 2;
        continue;
      }
    }
    const std::string_view one = src.substr(i, 1);
    if (is_operator(one)) {
      out.push_back(Token{TokenKind::Operator, std::string(one)});
    } else if (is_punct(one, lang)) {
      out.push_back(Token{TokenKind::Punct, std::string(one)});
    } else {
      throw LexError(base + i, std::string("illegal character '") + c + "'");
    }
    ++i;
  }
}

TokenSeq lex_j(std::string_view source) {
  TokenSeq seq{Lang::J, {}};
  lex_code(source, 0, Lang::J, seq.tokens);
  return seq;
}

TokenSeq lex_p(std::string_view source) {
  TokenSeq seq{Lang::P, {}};
  std::size_t depth = 0;
  std::size_t line_start = 0;
  while (line_start <= source.size()) {
    std::size_t line_end = source.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = source.size();
    std::string_view line = source.substr(line_start, line_end - line_start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t spaces = 0;
    while (spaces < line.size() && line[spaces] == ' ') ++spaces;
    if (spaces < line.size() && line[spaces] == '\t') throw LexError(line_start + spaces, "tab character");
    if (spaces < line.size()) {
      if (spaces % 4 != 0) throw LexError(line_start, "inconsistent indentation");
      const std::size_t level = spaces / 4;
      if (level > depth + 1) throw LexError(line_start, "inconsistent indentation");
      if (level == depth + 1) seq.tokens.push_back(Token{TokenKind::Indent, std::string(kIndentText)});
      for (; depth > level; --depth) seq.tokens.push_back(Token{TokenKind::Dedent, std::string(kDedentText)});
      depth = level;
      lex_code(line.substr(spaces), line_start + spaces, Lang::P, seq.tokens);
    }
    if (line_end == source.size()) break;
    line_start = line_end + 1;
  }
  for (; depth > 0; --depth) seq.tokens.push_back(Token{TokenKind::Dedent, std::string(kDedentText)});
  return seq;
}

TokenSeq lex_pivot(std::string_view source) {
  TokenSeq seq{Lang::Pivot, {}};
  std::size_t i = 0;
  while (i < source.size()) {
    const char c = source[i];
    if (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
      ++i;
      continue;
    }
    if (!is_ident_char(c)) throw LexError(i, std::string("illegal character '") + c + "'");
    std::size_t j = i;
    while (j < source.size() && is_ident_char(source[j])) ++j;
    seq.tokens.push_back(Token{TokenKind::Word, std::string(source.substr(i, j - i))});
    i = j;
  }
  return seq;
}

}  // namespace

TokenSeq lex(std::string_view source, Lang lang) {
  TokenSeq seq;
  switch (lang) {
    case Lang::J: seq = lex_j(source); break;
    case Lang::P: seq = lex_p(source); break;
    case Lang::Pivot: seq = lex_pivot(source); break;
  }
  if (seq.tokens.empty()) throw LexError(0, "empty input");
  return seq;
}

}  // namespace sgbt::minilang
