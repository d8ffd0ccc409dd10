#pragma once

#include <map>
#include <string>

#include "sgbt/minilang/ast.hpp"
#include "sgbt/minilang/token.hpp"

namespace sgbt::metrics {

using minilang::TokenSeq;

inline constexpr double kKeywordWeight = 4.0;
inline constexpr int kSubtreeDepth = 3;

struct CodeBleuWeights {
  double ngram = 0.25;
  double weighted_ngram = 0.25;
  double syntax = 0.25;
  double dataflow = 0.25;
};

struct CodeBleuResult {
  double score = 0.0;
  double ngram = 0.0;
  double weighted_ngram = 0.0;
  double syntax = 0.0;
  double dataflow = 0.0;
};

/// Multiset (label -> count) of every rooted subtree of depth 1..max_depth.
/// Labels: constructor plus operator or builtin; names become ID, numbers LIT.
std::map<std::string, int> subtrees(const minilang::Function& fn, int max_depth = kSubtreeDepth);

/// Weighted sum of four agreements between `hyp` and the ground-truth `ref`:
/// BLEU, keyword-weighted BLEU, AST subtree match (over the hypothesis'
/// subtrees) and dataflow edge match (over the reference's edges; two
/// edge-free programs agree fully). An unparsable or empty hypothesis scores
/// 0 on the components it cannot support.
/// Throws Error("UnparsableReference") and Error("InvalidArgument") for
/// negative weights or weights not summing to 1.
CodeBleuResult codebleu(const TokenSeq& hyp, const TokenSeq& ref, const CodeBleuWeights& weights = {},
                        double keyword_weight = kKeywordWeight);

}  // namespace sgbt::metrics
