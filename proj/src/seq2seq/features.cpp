#include "sgbt/seq2seq/features.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace sgbt::seq2seq {
namespace {

using minilang::Lang;

constexpr std::array<std::string_view, 9> kBlockKeywords = {"func", "def",     "function", "if",    "else",
                                                            "while", "when",   "otherwise", "repeat"};
constexpr std::array<std::string_view, 3> kOpeners = {"{", "indent", "begin"};
constexpr std::array<std::string_view, 3> kClosers = {"}", "dedent", "end"};

template <std::size_t N>
bool among(const std::array<std::string_view, N>& set, std::string_view text) {
  return std::find(set.begin(), set.end(), text) != set.end();
}

}  // namespace

std::string token_class(std::string_view text) {
  if (text == kBos || text == kEos) return std::string(text);
  if (minilang::is_keyword(text, Lang::J) || minilang::is_keyword(text, Lang::P) || minilang::is_operator(text) ||
      minilang::is_punct(text, Lang::J) || minilang::is_punct(text, Lang::P) || minilang::is_pivot_word(text) ||
      text == minilang::kIndentText || text == minilang::kDedentText)
    return std::string(text);
  if (!text.empty() && std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); }))
    return "LIT";
  return "ID";
}

namespace {
std::string class_at(const std::vector<minilang::Token>& toks, std::size_t i) {
  return i < toks.size() ? token_class(toks[i].text) : std::string(kEos);
}
}  // namespace

std::vector<Context> contexts(const TokenSeq& src) {
  const auto& toks = src.tokens;
  std::vector<Context> out;
  out.reserve(toks.size());
  std::vector<std::string> stack;
  std::string pending;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const std::string& text = toks[i].text;
    if (among(kClosers, text) && !stack.empty()) stack.pop_back();
    if (among(kBlockKeywords, text) && !(text == "while" && pending == "repeat")) pending = text;
    std::string block = !pending.empty() ? pending : stack.empty() ? std::string(kTop) : stack.back();
    out.push_back(Context{i == 0 ? std::string(kBos) : token_class(toks[i - 1].text), text, class_at(toks, i + 1),
                          class_at(toks, i + 2), std::move(block)});
    if (among(kOpeners, text)) {
      stack.push_back(pending.empty() ? std::string(kTop) : pending);
      pending.clear();
    }
  }
  return out;
}

Context bos_context(const TokenSeq& src) {
  return Context{std::string(kBos), std::string(kBos), class_at(src.tokens, 0), class_at(src.tokens, 1),
                 std::string(kTop)};
}

}  // namespace sgbt::seq2seq
