#include "sgbt/bt/sum_gen.hpp"

#include "sgbt/error.hpp"
#include "sgbt/seq2seq/decode.hpp"

namespace sgbt::bt {

TokenSeq summarize_generate(const ModelParams& S, const ModelParams& G, const TokenSeq& x, Lang target,
                            double dropout, Rng& rng) {
  if (!(dropout >= 0.0 && dropout <= 1.0)) throw Error("InvalidArgument", "dropout must be in [0, 1]");
  TokenSeq pivot = seq2seq::greedy(S, x, Lang::Pivot);
  if (dropout > 0.0) {
    TokenSeq kept{Lang::Pivot, {}};
    for (auto& t : pivot.tokens)
      if (!rng.bernoulli(dropout)) kept.tokens.push_back(std::move(t));
    pivot = std::move(kept);
  }
  if (pivot.empty()) return TokenSeq{target, {}};
  return seq2seq::greedy(G, pivot, target);
}

TokenSeq summarize_generate(const ModelParams& S, const ModelParams& G, const TokenSeq& x, Lang target,
                            double dropout, std::uint64_t seed) {
  Rng rng(seed, "dropout");
  return summarize_generate(S, G, x, target, dropout, rng);
}

}  // namespace sgbt::bt
