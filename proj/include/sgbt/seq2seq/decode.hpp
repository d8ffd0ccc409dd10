#pragma once

#include <cstddef>
#include <vector>

#include "sgbt/seq2seq/model.hpp"

namespace sgbt::seq2seq {

struct BeamConfig {
  std::size_t beam_size = 1;
  std::size_t n_best = 1;
};

struct Scored {
  TokenSeq seq;
  double logprob = 0.0;
};

/// n-best translations of `src` into `target`, best first. Positions are
/// scored independently, so keeping the B best prefixes is exact; prefixes
/// with identical output are merged (max score). Equal scores are ordered by
/// token texts. Output tokens are classified under `target`, and an
/// all-deleting hypothesis yields an empty sequence.
/// Throws Error("InvalidArgument") if B == 0 or n_best outside [1, B].
std::vector<Scored> generate(const ModelParams& theta, const TokenSeq& src, Lang target, const BeamConfig& cfg);

/// Top hypothesis under B = 1 (empty source gives an empty result).
TokenSeq greedy(const ModelParams& theta, const TokenSeq& src, Lang target);

}  // namespace sgbt::seq2seq
