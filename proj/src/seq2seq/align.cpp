#include "sgbt/seq2seq/align.hpp"

#include <algorithm>

#include "sgbt/error.hpp"

namespace sgbt::seq2seq {

std::vector<AlignedOp> align(const TokenSeq& src, const TokenSeq& tgt) {
  if (src.empty() || tgt.empty()) throw Error("EmptyInput", "align needs nonempty source and target");
  const std::size_t n = src.size();
  const std::size_t m = tgt.size();
  // score[i][j] orders the ways to turn src[i..] into tgt[j..]: edit cost
  // first, then fewer identical-token matches is worse. Keeping matched
  // tokens on the diagonal stops equal-cost alignments from sliding keywords
  // onto their neighbours.
  const std::size_t scale = n + m + 1;
  std::vector<std::size_t> score((n + 1) * (m + 1));
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return score[i * (m + 1) + j]; };
  auto diag = [&](std::size_t i, std::size_t j) {
    return src.tokens[i].text == tgt.tokens[j].text ? at(i + 1, j + 1) - 1 : at(i + 1, j + 1) + scale;
  };
  for (std::size_t i = n + 1; i-- > 0;) {
    for (std::size_t j = m + 1; j-- > 0;) {
      if (i == n) {
        at(i, j) = (m - j) * scale + n + m;
      } else if (j == m) {
        at(i, j) = (n - i) * scale + n + m;
      } else {
        at(i, j) = std::min({diag(i, j), at(i + 1, j) + scale, at(i, j + 1) + scale});
      }
    }
  }

  std::vector<AlignedOp> ops;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    const auto here = at(i, j);
    if (i < n && j < m && diag(i, j) == here) {
      ops.push_back({OpKind::Sub, static_cast<std::ptrdiff_t>(i), tgt.tokens[j].text});
      ++i;
      ++j;
    } else if (i < n && (j == m || at(i + 1, j) + scale == here)) {
      ops.push_back({OpKind::Del, static_cast<std::ptrdiff_t>(i), {}});
      ++i;
    } else {
      ops.push_back({OpKind::Ins, static_cast<std::ptrdiff_t>(i) - 1, tgt.tokens[j].text});
      ++j;
    }
  }
  return ops;
}

std::size_t alignment_cost(const std::vector<AlignedOp>& ops, const TokenSeq& src) {
  std::size_t c = 0;
  for (const auto& op : ops) {
    if (op.kind != OpKind::Sub || src.tokens.at(static_cast<std::size_t>(op.src)).text != op.text) ++c;
  }
  return c;
}

}  // namespace sgbt::seq2seq
