#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sgbt/minilang/token.hpp"

namespace sgbt::seq2seq {

using minilang::TokenSeq;

enum class OpKind { Sub, Del, Ins };

/// One step of a monotone source->target alignment. `src` is the source
/// position for Sub/Del; for Ins it is the source position the insertion
/// follows, or -1 for an insertion before the first source token.
struct AlignedOp {
  OpKind kind;
  std::ptrdiff_t src;
  std::string text;  // target text for Sub/Ins, empty for Del

  bool operator==(const AlignedOp&) const = default;
};

/// Minimum edit distance alignment (unit costs, equal-text Sub free).
/// Among optimal alignments those with the most identical-token matches win;
/// remaining ties are broken walking from the start, preferring Sub, then
/// Del, then Ins at each step. Throws Error("EmptyInput") if either side is empty.
std::vector<AlignedOp> align(const TokenSeq& src, const TokenSeq& tgt);

/// Total cost of an alignment under the same unit costs.
std::size_t alignment_cost(const std::vector<AlignedOp>& ops, const TokenSeq& src);

}  // namespace sgbt::seq2seq
