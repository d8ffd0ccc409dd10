#include "sgbt/metrics/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

#include "sgbt/error.hpp"

namespace sgbt::metrics {
namespace {

using NGram = std::vector<std::string_view>;

std::map<NGram, int> ngrams(const TokenSeq& seq, int n) {
  std::map<NGram, int> out;
  const auto& t = seq.tokens;
  for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= t.size(); ++i) {
    NGram g;
    for (int k = 0; k < n; ++k) g.emplace_back(t[i + static_cast<std::size_t>(k)].text);
    ++out[g];
  }
  return out;
}

}  // namespace

BleuStats& BleuStats::operator+=(const BleuStats& o) {
  for (int n = 0; n < kBleuOrder; ++n) {
    matched[n] += o.matched[n];
    total[n] += o.total[n];
  }
  hyp_len += o.hyp_len;
  ref_len += o.ref_len;
  return *this;
}

BleuStats bleu_stats(const TokenSeq& hyp, const std::vector<TokenSeq>& refs, const TokenWeight& weight) {
  BleuStats s;
  s.hyp_len = static_cast<double>(hyp.size());
  std::size_t best = 0;
  bool have = false;
  for (const auto& r : refs) {
    const auto diff = [&](std::size_t len) { return len > hyp.size() ? len - hyp.size() : hyp.size() - len; };
    if (!have || diff(r.size()) < diff(best) || (diff(r.size()) == diff(best) && r.size() < best)) {
      best = r.size();
      have = true;
    }
  }
  s.ref_len = static_cast<double>(best);

  for (int n = 1; n <= kBleuOrder; ++n) {
    std::map<NGram, int> max_ref;
    for (const auto& r : refs)
      for (const auto& [g, c] : ngrams(r, n)) max_ref[g] = std::max(max_ref[g], c);
    for (const auto& [g, c] : ngrams(hyp, n)) {
      double w = 1.0;
      if (weight) {
        w = 0.0;
        for (auto tok : g) w = std::max(w, weight(tok));
      }
      auto it = max_ref.find(g);
      const int clipped = it == max_ref.end() ? 0 : std::min(c, it->second);
      s.matched[n - 1] += w * clipped;
      s.total[n - 1] += w * c;
    }
  }
  return s;
}

double bleu_from_stats(const BleuStats& s) {
  if (s.hyp_len <= 0.0) return 0.0;
  double log_sum = 0.0;
  int orders = 0;
  for (int n = 0; n < kBleuOrder; ++n) {
    if (s.total[n] <= 0.0) continue;
    const double m = s.matched[n] > 0.0 ? s.matched[n] : kBleuEpsilon;
    log_sum += std::log(m / s.total[n]);
    ++orders;
  }
  if (orders == 0) return 0.0;
  const double bp = std::exp(std::min(0.0, 1.0 - s.ref_len / s.hyp_len));
  return bp * std::exp(log_sum / orders);
}

double bleu(const TokenSeq& hyp, const std::vector<TokenSeq>& refs) {
  if (hyp.empty()) throw Error("EmptyInput", "bleu needs a nonempty hypothesis");
  if (refs.empty()) throw Error("EmptyInput", "bleu needs at least one reference");
  return bleu_from_stats(bleu_stats(hyp, refs));
}

double corpus_bleu(const std::vector<TokenSeq>& hyps, const std::vector<std::vector<TokenSeq>>& refs) {
  if (hyps.size() != refs.size()) throw Error("InvalidArgument", "hyps and refs differ in length");
  BleuStats total;
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    if (refs[i].empty()) throw Error("EmptyInput", "item without references");
    total += bleu_stats(hyps[i], refs[i]);
  }
  return bleu_from_stats(total);
}

int exact_match(const TokenSeq& hyp, const std::vector<TokenSeq>& refs) {
  const auto h = hyp.texts();
  for (const auto& r : refs)
    if (r.texts() == h) return 1;
  return 0;
}

}  // namespace sgbt::metrics
