#pragma once

#include <array>
#include <functional>
#include <string_view>
#include <vector>

#include "sgbt/minilang/token.hpp"

namespace sgbt::metrics {

using minilang::TokenSeq;

inline constexpr int kBleuOrder = 4;
inline constexpr double kBleuEpsilon = 1e-9;

/// Sufficient statistics; counts are real so token weights can scale them.
struct BleuStats {
  std::array<double, kBleuOrder> matched{};
  std::array<double, kBleuOrder> total{};
  double hyp_len = 0.0;
  double ref_len = 0.0;

  BleuStats& operator+=(const BleuStats& o);
};

using TokenWeight = std::function<double(std::string_view)>;

/// Clipped n-gram counts of `hyp` against `refs`. With `weight`, an n-gram
/// counts as the largest weight among its tokens, in matched and total alike.
/// The reference length is the closest to the hypothesis (shorter on ties).
BleuStats bleu_stats(const TokenSeq& hyp, const std::vector<TokenSeq>& refs, const TokenWeight& weight = {});

/// Geometric mean of the n-gram precisions times exp(min(0, 1 - r/c)).
/// A precision with no matches uses kBleuEpsilon matches instead; orders for
/// which the hypothesis has no n-grams at all are left out. 0 when c = 0.
double bleu_from_stats(const BleuStats& s);

/// Sentence BLEU-4. Throws Error("EmptyInput") for an empty hyp or no refs.
double bleu(const TokenSeq& hyp, const std::vector<TokenSeq>& refs);

/// Counts summed over the corpus before the geometric mean.
double corpus_bleu(const std::vector<TokenSeq>& hyps, const std::vector<std::vector<TokenSeq>>& refs);

/// 1 iff the token texts equal one of the references.
int exact_match(const TokenSeq& hyp, const std::vector<TokenSeq>& refs);

}  // namespace sgbt::metrics
