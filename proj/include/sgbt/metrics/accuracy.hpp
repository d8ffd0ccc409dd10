#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sgbt/corpus/corpus.hpp"
#include "sgbt/minilang/interpreter.hpp"

namespace sgbt::metrics {

using corpus::ParallelEvalSet;
using minilang::Lang;
using minilang::TokenSeq;

/// Translation direction over a parallel set: source member -> target member.
struct Direction {
  Lang source = Lang::J;
  Lang target = Lang::P;

  std::string name() const;  // "j2p" / "p2j"
  const TokenSeq& source_of(const corpus::EvalPair& p) const { return source == Lang::J ? p.j : p.p; }
  const TokenSeq& target_of(const corpus::EvalPair& p) const { return target == Lang::J ? p.j : p.p; }
};
Direction direction_from_string(const std::string& name);

enum class Outcome { Error, Timeout, Failure, Success };
std::string to_string(Outcome o);

/// Runs the unit tests in order. A parse failure, arity mismatch or runtime
/// error is Error and a step-limit hit is Timeout, whichever comes first;
/// otherwise any wrong output makes it a Failure.
Outcome run_tests(const TokenSeq& hyp, const std::vector<corpus::TestCase>& tests,
                  std::uint64_t step_limit = minilang::kDefaultStepLimit);

/// CA@m B=n: of the first n hypotheses, the m best are tried.
struct CaConfig {
  std::size_t m = 1;
  std::size_t beam = 1;
  auto operator<=>(const CaConfig&) const = default;
  std::string key() const;  // "m1_b1"
};

struct OutcomeCounts {
  std::size_t error = 0;
  std::size_t failure = 0;
  std::size_t success = 0;
  std::size_t timeout = 0;
  std::size_t exact_match_within_success = 0;

  std::size_t total() const { return error + failure + success + timeout; }
  bool operator==(const OutcomeCounts&) const = default;
};

struct CaResult {
  std::map<CaConfig, double> ca;
  OutcomeCounts outcomes;  // of the top-1 hypothesis per item
};

/// `hyps_per_item[i]` is the n-best list for eval pair i, best first.
/// Throws Error("BeamTooSmall") if a list is shorter than a requested beam,
/// Error("InvalidArgument") on a size mismatch or m outside [1, B].
CaResult computational_accuracy(const std::vector<std::vector<TokenSeq>>& hyps_per_item, const ParallelEvalSet& eval,
                                const Direction& dir, std::uint64_t step_limit, const std::vector<CaConfig>& configs);

}  // namespace sgbt::metrics
