#pragma once

#include <cstdint>

#include "sgbt/rng.hpp"
#include "sgbt/seq2seq/model.hpp"

namespace sgbt::bt {

using minilang::Lang;
using minilang::TokenSeq;
using seq2seq::ModelParams;

/// G(S(x)): greedy summary of `x` under S, each summary token dropped with
/// probability `dropout`, then greedy generation into `target` under G.
/// An empty summary gives an empty result (callers skip such pairs).
TokenSeq summarize_generate(const ModelParams& S, const ModelParams& G, const TokenSeq& x, Lang target,
                            double dropout, Rng& rng);
TokenSeq summarize_generate(const ModelParams& S, const ModelParams& G, const TokenSeq& x, Lang target,
                            double dropout, std::uint64_t seed);

}  // namespace sgbt::bt
