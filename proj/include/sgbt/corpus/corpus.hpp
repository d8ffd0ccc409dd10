#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sgbt/minilang/ast.hpp"
#include "sgbt/minilang/interpreter.hpp"
#include "sgbt/minilang/token.hpp"

namespace sgbt::corpus {

using minilang::Function;
using minilang::Int;
using minilang::Lang;
using minilang::TokenSeq;

inline constexpr std::size_t kDefaultMaxLen = 256;
inline constexpr std::size_t kDefaultTests = 10;
inline constexpr std::int64_t kTestArgMin = -10;
inline constexpr std::int64_t kTestArgMax = 10;
inline constexpr int kEvalRedraws = 20;

/// (code, summary) pair: one element of the supervised summarization set.
struct BimodalPair {
  std::string id;
  TokenSeq code;     // lang J or P
  TokenSeq summary;  // lang Pivot
};

struct MonoItem {
  std::string id;
  TokenSeq seq;
};

/// Unlabeled pool of functions in one language.
struct MonoCorpus {
  Lang lang = Lang::J;
  std::vector<MonoItem> items;
};

struct TestCase {
  std::vector<Int> args;
  Int expected;
};

struct EvalPair {
  std::string id;
  TokenSeq j;
  TokenSeq p;
  std::vector<TestCase> tests;
};

struct ParallelEvalSet {
  std::vector<EvalPair> pairs;
  std::size_t discarded = 0;
};

struct CorpusStats {
  std::size_t n_functions = 0;
  std::size_t n_tokens = 0;
  bool operator==(const CorpusStats&) const = default;
};

/// Random valid functions: 1-3 params, 1-8 statements in total, expression
/// depth <= `depth`. Deterministic in (seed, stream). Duplicates possible.
std::vector<Function> generate(std::uint64_t seed, std::size_t count, int depth = 3,
                               std::string_view stream = "corpus");

std::vector<BimodalPair> make_bimodal(const std::vector<Function>& asts, Lang lang,
                                      std::string_view id_prefix = "bi");

/// FNV-1a 64 over the canonical rendered text of each sequence.
std::uint64_t content_hash(const TokenSeq& seq);

/// Keeps the first occurrence of each content hash, order otherwise preserved.
std::vector<TokenSeq> dedup(const std::vector<TokenSeq>& items);
MonoCorpus dedup(const MonoCorpus& corpus);

/// One sequence per top-level function, in file order. The whole file must
/// parse (strict mode); an empty or blank file yields no functions.
std::vector<TokenSeq> extract_functions(std::string_view file_text, Lang lang);

std::vector<TokenSeq> length_filter(const std::vector<TokenSeq>& items, std::size_t max_len = kDefaultMaxLen);
MonoCorpus length_filter(const MonoCorpus& corpus, std::size_t max_len = kDefaultMaxLen);

/// Parallel J/P evaluation pairs with `n_tests` unit tests each. Test args
/// are uniform in [-10, 10]; a program whose J member faults or times out on
/// a draw is re-drawn up to 20 times, then discarded (counted).
ParallelEvalSet make_eval_set(const std::vector<Function>& asts, std::uint64_t seed,
                              std::size_t n_tests = kDefaultTests,
                              std::uint64_t step_limit = minilang::kDefaultStepLimit,
                              std::string_view id_prefix = "ev");

CorpusStats corpus_stats(const MonoCorpus& corpus);
CorpusStats corpus_stats(const std::vector<BimodalPair>& pairs);

/// Mono corpus from ASTs: print, dedup, length filter.
MonoCorpus make_mono(const std::vector<Function>& asts, Lang lang, std::size_t max_len = kDefaultMaxLen,
                     std::string_view id_prefix = "m");

}  // namespace sgbt::corpus
