#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sgbt/minilang/token.hpp"
#include "sgbt/seq2seq/features.hpp"

namespace sgbt::seq2seq {

using minilang::Lang;

inline constexpr double kDefaultCopyAlpha = 1.0;
inline constexpr double kDefaultSmoothing = 0.1;
inline constexpr double kDefaultBackoff = 1.0;
inline constexpr std::size_t kMaxInsCandidates = 5;

// Edit ops are stored as short strings so tables stay flat and serializable:
//   "sub:<text>"  replace the source token by <text>
//   "del"         drop the source token
//   "none"        no insertion after the source token
//   "ins:<a b>"   insert the space-separated phrase after the source token
std::string sub_op(std::string_view text);
std::string ins_op(const std::vector<std::string>& phrase);
inline const std::string kDelOp = "del";
inline const std::string kNoneOp = "none";
/// Target texts an op emits (empty for del/none).
std::vector<std::string> op_output(std::string_view op);

struct OpCounts {
  std::map<std::string, double> ops;
  double total = 0.0;
  bool operator==(const OpCounts&) const = default;
};

using CountTable = std::unordered_map<std::string, OpCounts>;

/// Aligned-token edit model. Each source position independently picks a
/// primary op (sub/del) and an insertion op (none/ins), both conditioned on
/// the target language and the position's context.
///
/// Counts back off from (left, cur, right, block) to (left, cur, right) to
/// (cur). The copy prior is not stored: it is the constant alpha added to
/// sub:<cur> (primary) and none (insertion) at the bottom level, so an
/// untouched model copies its input.
struct ModelParams {
  double copy_alpha = kDefaultCopyAlpha;
  double smoothing = kDefaultSmoothing;
  double backoff = kDefaultBackoff;
  std::size_t max_ins = kMaxInsCandidates;
  CountTable primary;
  CountTable insertion;
  std::map<Lang, std::set<std::string>> vocab;  // target texts seen per language

  bool operator==(const ModelParams&) const = default;
};

/// Throws Error("InvalidArgument") unless both weights are > 0.
ModelParams init(double copy_alpha = kDefaultCopyAlpha, double smoothing = kDefaultSmoothing);

struct TrainPair {
  TokenSeq src;
  TokenSeq tgt;
};

/// Aligns every pair and adds `weight` to each observed op at all three
/// context levels. Throws Error("EmptyBatch") for an empty batch and
/// Error("InvalidArgument") for weight <= 0 or an empty sequence.
ModelParams train_update(ModelParams theta, const std::vector<TrainPair>& batch, double weight = 1.0);

struct OpProb {
  std::string op;
  double p;
};

/// Full normalized distributions, sorted by probability desc then op text.
std::vector<OpProb> primary_distribution(const ModelParams& theta, const Context& ctx, Lang target);
std::vector<OpProb> insertion_distribution(const ModelParams& theta, const Context& ctx, Lang target);

}  // namespace sgbt::seq2seq
