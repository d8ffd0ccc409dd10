#include "sgbt/seq2seq/decode.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sgbt/error.hpp"

namespace sgbt::seq2seq {
namespace {

struct Partial {
  std::vector<std::string> out;
  double score = 0.0;
};

bool better(const Partial& a, const Partial& b) {
  if (a.score != b.score) return a.score > b.score;
  return a.out < b.out;
}

// Keeps the `width` best, merging equal outputs.
std::vector<Partial> prune(std::vector<Partial> items, std::size_t width) {
  std::map<std::vector<std::string>, double> best;
  for (auto& p : items) {
    auto [it, fresh] = best.emplace(std::move(p.out), p.score);
    if (!fresh) it->second = std::max(it->second, p.score);
  }
  std::vector<Partial> out;
  out.reserve(best.size());
  for (auto& [texts, score] : best) out.push_back(Partial{texts, score});
  std::stable_sort(out.begin(), out.end(), better);
  if (out.size() > width) out.resize(width);
  return out;
}

// Options at one position: primary op (absent at the BOS slot) followed by an
// insertion op. Only the top-`width` combined options can matter.
std::vector<Partial> options(const ModelParams& theta, const Context& ctx, Lang target, bool with_primary,
                             std::size_t width) {
  std::vector<OpProb> prim;
  if (with_primary) {
    prim = primary_distribution(theta, ctx, target);
    if (prim.size() > width) prim.resize(width);
  } else {
    prim.push_back(OpProb{kNoneOp, 1.0});
  }
  std::vector<OpProb> ins;
  std::size_t n_ins = 0;
  for (auto& op : insertion_distribution(theta, ctx, target)) {
    if (op.op != kNoneOp) {
      if (n_ins == theta.max_ins) continue;
      ++n_ins;
    }
    ins.push_back(std::move(op));
  }

  std::vector<Partial> combos;
  for (const auto& a : prim) {
    for (const auto& b : ins) {
      Partial p{op_output(a.op), std::log(a.p) + std::log(b.p)};
      auto tail = op_output(b.op);
      p.out.insert(p.out.end(), tail.begin(), tail.end());
      combos.push_back(std::move(p));
    }
  }
  return prune(std::move(combos), width);
}

}  // namespace

std::vector<Scored> generate(const ModelParams& theta, const TokenSeq& src, Lang target, const BeamConfig& cfg) {
  if (cfg.beam_size == 0) throw Error("InvalidArgument", "beam size must be >= 1");
  if (cfg.n_best == 0 || cfg.n_best > cfg.beam_size) throw Error("InvalidArgument", "n_best must be in [1, beam]");
  const std::size_t width = cfg.beam_size;

  std::vector<Partial> beam{Partial{}};
  if (!src.empty()) {
    auto step = [&](const Context& ctx, bool with_primary) {
      const auto opts = options(theta, ctx, target, with_primary, width);
      std::vector<Partial> next;
      next.reserve(beam.size() * opts.size());
      for (const auto& h : beam) {
        for (const auto& o : opts) {
          Partial p{h.out, h.score + o.score};
          p.out.insert(p.out.end(), o.out.begin(), o.out.end());
          next.push_back(std::move(p));
        }
      }
      beam = prune(std::move(next), width);
    };
    step(bos_context(src), false);
    for (const auto& ctx : contexts(src)) step(ctx, true);
  }

  std::vector<Scored> out;
  for (std::size_t i = 0; i < beam.size() && i < cfg.n_best; ++i)
    out.push_back(Scored{minilang::make_seq(target, beam[i].out), beam[i].score});
  return out;
}

TokenSeq greedy(const ModelParams& theta, const TokenSeq& src, Lang target) {
  return generate(theta, src, target, BeamConfig{1, 1}).front().seq;
}

}  // namespace sgbt::seq2seq
