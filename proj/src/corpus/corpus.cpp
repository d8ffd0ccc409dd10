#include <unordered_set>

#include "sgbt/corpus/corpus.hpp"
#include "sgbt/error.hpp"
#include "sgbt/minilang/lexer.hpp"
#include "sgbt/minilang/parser.hpp"
#include "sgbt/minilang/printer.hpp"
#include "sgbt/rng.hpp"

namespace sgbt::corpus {

std::vector<BimodalPair> make_bimodal(const std::vector<Function>& asts, Lang lang, std::string_view id_prefix) {
  if (!minilang::is_code(lang)) throw Error("InvalidArgument", "bimodal pairs need a code language");
  std::vector<BimodalPair> out;
  out.reserve(asts.size());
  for (std::size_t i = 0; i < asts.size(); ++i) {
    out.push_back(BimodalPair{std::string(id_prefix) + "-" + std::string(minilang::to_string(lang)) + "-" +
                                  std::to_string(i),
                              minilang::print(asts[i], lang), minilang::print(asts[i], Lang::Pivot)});
  }
  return out;
}

std::uint64_t content_hash(const TokenSeq& seq) { return fnv1a64(minilang::render_text(seq)); }

std::vector<TokenSeq> dedup(const std::vector<TokenSeq>& items) {
  std::unordered_set<std::uint64_t> seen;
  std::vector<TokenSeq> out;
  for (const auto& t : items)
    if (seen.insert(content_hash(t)).second) out.push_back(t);
  return out;
}

MonoCorpus dedup(const MonoCorpus& corpus) {
  std::unordered_set<std::uint64_t> seen;
  MonoCorpus out{corpus.lang, {}};
  for (const auto& it : corpus.items)
    if (seen.insert(content_hash(it.seq)).second) out.items.push_back(it);
  return out;
}

std::vector<TokenSeq> extract_functions(std::string_view file_text, Lang lang) {
  if (file_text.find_first_not_of(" \t\r\n") == std::string_view::npos) return {};
  const TokenSeq all = minilang::lex(file_text, lang);
  std::vector<TokenSeq> out;
  std::size_t pos = 0;
  while (pos < all.size()) {
    std::size_t end = pos;
    (void)minilang::parse_function_at(all, pos, end);
    TokenSeq one{lang, {all.tokens.begin() + static_cast<std::ptrdiff_t>(pos),
                        all.tokens.begin() + static_cast<std::ptrdiff_t>(end)}};
    out.push_back(std::move(one));
    pos = end;
  }
  return out;
}

std::vector<TokenSeq> length_filter(const std::vector<TokenSeq>& items, std::size_t max_len) {
  if (max_len == 0) throw Error("InvalidArgument", "max_len must be >= 1");
  std::vector<TokenSeq> out;
  for (const auto& t : items)
    if (t.size() <= max_len) out.push_back(t);
  return out;
}

MonoCorpus length_filter(const MonoCorpus& corpus, std::size_t max_len) {
  if (max_len == 0) throw Error("InvalidArgument", "max_len must be >= 1");
  MonoCorpus out{corpus.lang, {}};
  for (const auto& it : corpus.items)
    if (it.seq.size() <= max_len) out.items.push_back(it);
  return out;
}

CorpusStats corpus_stats(const MonoCorpus& corpus) {
  CorpusStats s;
  for (const auto& it : corpus.items) {
    ++s.n_functions;
    s.n_tokens += it.seq.size();
  }
  return s;
}

// Counts code tokens only; the summaries are derived data.
CorpusStats corpus_stats(const std::vector<BimodalPair>& pairs) {
  CorpusStats s;
  for (const auto& p : pairs) {
    ++s.n_functions;
    s.n_tokens += p.code.size();
  }
  return s;
}

MonoCorpus make_mono(const std::vector<Function>& asts, Lang lang, std::size_t max_len, std::string_view id_prefix) {
  MonoCorpus raw{lang, {}};
  raw.items.reserve(asts.size());
  for (std::size_t i = 0; i < asts.size(); ++i)
    raw.items.push_back(MonoItem{std::string(id_prefix) + "-" + std::string(minilang::to_string(lang)) + "-" +
                                     std::to_string(i),
                                 minilang::print(asts[i], lang)});
  return length_filter(dedup(raw), max_len);
}

}  // namespace sgbt::corpus
