#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "sgbt/metrics/accuracy.hpp"
#include "sgbt/metrics/codebleu.hpp"
#include "sgbt/seq2seq/model.hpp"

namespace sgbt::metrics {

/// Default CA grid: CA@1 B=1, CA@1 B=10, CA@5 B=5, CA@10 B=10.
std::vector<CaConfig> default_ca_configs();

struct EvalConfig {
  Direction dir;
  std::vector<CaConfig> ca = default_ca_configs();
  std::uint64_t step_limit = minilang::kDefaultStepLimit;
  CodeBleuWeights weights;
  double keyword_weight = kKeywordWeight;
};

struct MetricReport {
  std::string direction;
  std::size_t n_items = 0;
  double bleu = 0.0;  // corpus BLEU of the top-1 hypotheses
  double em = 0.0;
  CodeBleuResult codebleu;  // item means
  std::map<CaConfig, double> ca;
  OutcomeCounts outcomes;
};

/// Scores given n-best lists (best first) against the eval set.
MetricReport evaluate_hyps(const std::vector<std::vector<TokenSeq>>& hyps_per_item, const ParallelEvalSet& eval,
                           const EvalConfig& cfg);

/// Decodes every source with beam = the widest CA config, then scores.
/// Beam decoding is exact, so the first B' entries of the wide list are
/// what a B'-wide beam would return.
MetricReport evaluate_all(const seq2seq::ModelParams& theta, const ParallelEvalSet& eval, const EvalConfig& cfg);

nlohmann::json to_json(const MetricReport& r);

/// Sorted keys, no whitespace variation, every float with exactly 6 decimals.
std::string canonical_dump(const nlohmann::json& j, int indent = 2);

}  // namespace sgbt::metrics
