#include "sgbt/metrics/accuracy.hpp"

#include <algorithm>

#include "sgbt/error.hpp"
#include "sgbt/metrics/bleu.hpp"
#include "sgbt/minilang/parser.hpp"

namespace sgbt::metrics {

std::string Direction::name() const {
  return std::string(minilang::to_string(source)) + "2" + std::string(minilang::to_string(target));
}

Direction direction_from_string(const std::string& name) {
  if (name == "j2p") return Direction{Lang::J, Lang::P};
  if (name == "p2j") return Direction{Lang::P, Lang::J};
  throw Error("InvalidArgument", "direction must be j2p or p2j, got '" + name + "'");
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Error: return "error";
    case Outcome::Timeout: return "timeout";
    case Outcome::Failure: return "failure";
    case Outcome::Success: return "success";
  }
  return "?";
}

std::string CaConfig::key() const { return "m" + std::to_string(m) + "_b" + std::to_string(beam); }

Outcome run_tests(const TokenSeq& hyp, const std::vector<corpus::TestCase>& tests, std::uint64_t step_limit) {
  if (hyp.empty()) return Outcome::Error;
  minilang::Function fn;
  try {
    fn = minilang::parse(hyp);
  } catch (const Error&) {
    return Outcome::Error;
  }
  bool mismatch = false;
  for (const auto& t : tests) {
    if (t.args.size() != fn.params.size()) return Outcome::Error;
    const auto r = minilang::interpret(fn, t.args, step_limit);
    if (std::holds_alternative<minilang::RuntimeError>(r)) return Outcome::Error;
    if (std::holds_alternative<minilang::Timeout>(r)) return Outcome::Timeout;
    if (std::get<minilang::Value>(r).value != t.expected) mismatch = true;
  }
  return mismatch ? Outcome::Failure : Outcome::Success;
}

CaResult computational_accuracy(const std::vector<std::vector<TokenSeq>>& hyps_per_item, const ParallelEvalSet& eval,
                                const Direction& dir, std::uint64_t step_limit, const std::vector<CaConfig>& configs) {
  if (hyps_per_item.size() != eval.pairs.size())
    throw Error("InvalidArgument", "hypothesis lists and eval pairs differ in count");
  std::size_t need = 1;
  for (const auto& c : configs) {
    if (c.m == 0 || c.m > c.beam) throw Error("InvalidArgument", "CA config needs 1 <= m <= B");
    need = std::max(need, c.beam);
  }
  for (const auto& h : hyps_per_item)
    if (h.size() < need)
      throw Error("BeamTooSmall", "an item has " + std::to_string(h.size()) + " hypotheses, need " +
                                      std::to_string(need));

  CaResult res;
  std::map<CaConfig, std::size_t> correct;
  for (std::size_t i = 0; i < eval.pairs.size(); ++i) {
    const auto& pair = eval.pairs[i];
    const auto& hyps = hyps_per_item[i];
    // Outcomes are computed lazily: only as deep as the widest config needs.
    std::vector<Outcome> outcome;
    auto outcome_at = [&](std::size_t k) {
      while (outcome.size() <= k) {
        // Judge the text as target-language code whatever tag it came with.
        const auto as_target = minilang::make_seq(dir.target, hyps[outcome.size()].texts());
        outcome.push_back(run_tests(as_target, pair.tests, step_limit));
      }
      return outcome[k];
    };
    for (const auto& c : configs) {
      bool ok = false;
      for (std::size_t k = 0; k < std::min(c.m, c.beam) && !ok; ++k) ok = outcome_at(k) == Outcome::Success;
      if (ok) ++correct[c];
    }
    switch (outcome_at(0)) {
      case Outcome::Error: ++res.outcomes.error; break;
      case Outcome::Timeout: ++res.outcomes.timeout; break;
      case Outcome::Failure: ++res.outcomes.failure; break;
      case Outcome::Success:
        ++res.outcomes.success;
        res.outcomes.exact_match_within_success += static_cast<std::size_t>(exact_match(hyps[0], {dir.target_of(pair)}));
        break;
    }
  }
  const double n = static_cast<double>(eval.pairs.size());
  for (const auto& c : configs) res.ca[c] = n > 0 ? static_cast<double>(correct[c]) / n : 0.0;
  return res;
}

}  // namespace sgbt::metrics
