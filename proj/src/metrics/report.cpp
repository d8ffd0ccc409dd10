#include "sgbt/metrics/report.hpp"

#include <algorithm>
#include <cstdio>

#include "sgbt/metrics/bleu.hpp"
#include "sgbt/seq2seq/decode.hpp"

namespace sgbt::metrics {
namespace {

void dump(const nlohmann::json& j, int indent, int level, std::string& out) {
  const std::string pad = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * (level + 1)), ' ') : "";
  const std::string close = indent > 0 ? "\n" + std::string(static_cast<std::size_t>(indent * level), ' ') : "";
  const char* sep = indent > 0 ? ": " : ":";
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {  // object_t is a std::map: keys come sorted
        if (!first) out += ',';
        first = false;
        out += pad + nlohmann::json(k).dump() + sep;
        dump(v, indent, level + 1, out);
      }
      out += close + '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        out += pad;
        dump(j[i], indent, level + 1, out);
      }
      out += close + ']';
      return;
    }
    case nlohmann::json::value_t::number_float: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6f", j.get<double>());
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::vector<CaConfig> default_ca_configs() { return {{1, 1}, {1, 10}, {5, 5}, {10, 10}}; }

MetricReport evaluate_hyps(const std::vector<std::vector<TokenSeq>>& hyps_per_item, const ParallelEvalSet& eval,
                           const EvalConfig& cfg) {
  const auto ca = computational_accuracy(hyps_per_item, eval, cfg.dir, cfg.step_limit, cfg.ca);
  MetricReport r;
  r.direction = cfg.dir.name();
  r.n_items = eval.pairs.size();
  r.ca = ca.ca;
  r.outcomes = ca.outcomes;

  std::vector<TokenSeq> tops;
  std::vector<std::vector<TokenSeq>> refs;
  double em = 0.0;
  CodeBleuResult cb;
  for (std::size_t i = 0; i < eval.pairs.size(); ++i) {
    const auto& ref = cfg.dir.target_of(eval.pairs[i]);
    const auto top = minilang::make_seq(cfg.dir.target, hyps_per_item[i].front().texts());
    em += exact_match(top, {ref});
    const auto c = codebleu(top, ref, cfg.weights, cfg.keyword_weight);
    cb.score += c.score;
    cb.ngram += c.ngram;
    cb.weighted_ngram += c.weighted_ngram;
    cb.syntax += c.syntax;
    cb.dataflow += c.dataflow;
    tops.push_back(top);
    refs.push_back({ref});
  }
  if (!eval.pairs.empty()) {
    const double n = static_cast<double>(eval.pairs.size());
    r.bleu = corpus_bleu(tops, refs);
    r.em = em / n;
    r.codebleu = CodeBleuResult{cb.score / n, cb.ngram / n, cb.weighted_ngram / n, cb.syntax / n, cb.dataflow / n};
  }
  return r;
}

MetricReport evaluate_all(const seq2seq::ModelParams& theta, const ParallelEvalSet& eval, const EvalConfig& cfg) {
  std::size_t width = 1;
  for (const auto& c : cfg.ca) width = std::max(width, c.beam);
  std::vector<std::vector<TokenSeq>> hyps;
  hyps.reserve(eval.pairs.size());
  for (const auto& p : eval.pairs) {
    std::vector<TokenSeq> list;
    for (auto& s : seq2seq::generate(theta, cfg.dir.source_of(p), cfg.dir.target, {width, width}))
      list.push_back(std::move(s.seq));
    hyps.push_back(std::move(list));
  }
  return evaluate_hyps(hyps, eval, cfg);
}

nlohmann::json to_json(const MetricReport& r) {
  nlohmann::json ca = nlohmann::json::object();
  for (const auto& [c, v] : r.ca) ca[c.key()] = v;
  return nlohmann::json{
      {"direction", r.direction},
      {"n_items", r.n_items},
      {"bleu", r.bleu},
      {"em", r.em},
      {"codebleu",
       {{"score", r.codebleu.score},
        {"ngram", r.codebleu.ngram},
        {"weighted_ngram", r.codebleu.weighted_ngram},
        {"syntax", r.codebleu.syntax},
        {"dataflow", r.codebleu.dataflow}}},
      {"ca", ca},
      {"outcome_counts",
       {{"error", r.outcomes.error},
        {"failure", r.outcomes.failure},
        {"success", r.outcomes.success},
        {"timeout", r.outcomes.timeout},
        {"exact_match_within_success", r.outcomes.exact_match_within_success}}},
  };
}

std::string canonical_dump(const nlohmann::json& j, int indent) {
  std::string out;
  dump(j, indent, 0, out);
  return out;
}

}  // namespace sgbt::metrics
