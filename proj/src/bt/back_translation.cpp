#include "sgbt/bt/back_translation.hpp"

#include "sgbt/bt/sum_gen.hpp"
#include "sgbt/error.hpp"
#include "sgbt/metrics/bleu.hpp"
#include "sgbt/rng.hpp"
#include "sgbt/seq2seq/decode.hpp"

namespace sgbt::bt {
namespace {

using minilang::Lang;
using minilang::TokenSeq;
using seq2seq::TrainPair;

void require_pool(const MonoCorpus& c, const char* what) {
  if (c.items.empty()) throw Error("ExhaustedCorpus", std::string(what) + " pool is empty");
}

ModelParams train_if_any(ModelParams theta, const std::vector<TrainPair>& pairs) {
  if (pairs.empty()) return theta;
  return seq2seq::train_update(std::move(theta), pairs);
}

void evaluate_into(TrainState& st, const ParallelEvalSet& dev, StepRecord& rec, bool first = false) {
  const double score = dev_bleu(st.f, st.b, dev);
  rec.dev_bleu = score;
  if (first || score > st.best.dev_bleu) st.best = Checkpoint{st.k, st.f, st.b, score};
}

}  // namespace

std::string to_string(WarmStart w) { return w == WarmStart::Online ? "online" : "offline"; }

WarmStart warm_start_from_string(const std::string& s) {
  if (s == "online") return WarmStart::Online;
  if (s == "offline") return WarmStart::Offline;
  throw Error("InvalidArgument", "warm start must be online or offline, got '" + s + "'");
}

void BTConfig::validate() const {
  if (m > steps) throw Error("InvalidArgument", "m must not exceed the step count");
  if (batch_size == 0) throw Error("InvalidArgument", "batch size must be >= 1");
  if (eval_interval == 0) throw Error("InvalidArgument", "eval interval must be >= 1");
  if (!(dropout >= 0.0 && dropout <= 1.0)) throw Error("InvalidArgument", "dropout must be in [0, 1]");
}

SgModels train_sg(const std::vector<BimodalPair>& bimodal_j, const std::vector<BimodalPair>& bimodal_p,
                  double copy_alpha, double smoothing) {
  if (bimodal_j.empty() || bimodal_p.empty()) throw Error("EmptyCorpus", "both bimodal sets must be nonempty");
  std::vector<TrainPair> to_summary;
  std::vector<TrainPair> to_code;
  for (const auto* set : {&bimodal_j, &bimodal_p}) {
    for (const auto& p : *set) {
      to_summary.push_back(TrainPair{p.code, p.summary});
      to_code.push_back(TrainPair{p.summary, p.code});
    }
  }
  return SgModels{seq2seq::train_update(seq2seq::init(copy_alpha, smoothing), to_summary),
                  seq2seq::train_update(seq2seq::init(copy_alpha, smoothing), to_code)};
}

TrainState initial_state(const BTConfig& cfg) {
  TrainState st;
  st.f = seq2seq::init(cfg.copy_alpha, cfg.smoothing);
  st.b = st.f;
  st.best = Checkpoint{0, st.f, st.b, 0.0};
  return st;
}

double dev_bleu(const ModelParams& f, const ModelParams& b, const ParallelEvalSet& dev) {
  if (dev.pairs.empty()) return 0.0;
  std::vector<TokenSeq> to_p, to_j;
  std::vector<std::vector<TokenSeq>> ref_p, ref_j;
  for (const auto& pair : dev.pairs) {
    to_p.push_back(seq2seq::greedy(f, pair.j, Lang::P));
    ref_p.push_back({pair.p});
    to_j.push_back(seq2seq::greedy(b, pair.p, Lang::J));
    ref_j.push_back({pair.j});
  }
  return 0.5 * (metrics::corpus_bleu(to_p, ref_p) + metrics::corpus_bleu(to_j, ref_j));
}

TrainState bt_step(TrainState st, const MonoCorpus& src, const MonoCorpus& tgt, const SgModels& sg,
                   const BTConfig& cfg) {
  cfg.validate();
  if (st.k >= cfg.steps) throw Error("InvalidArgument", "step " + std::to_string(st.k) + " is already the last");
  require_pool(src, "source");
  require_pool(tgt, "target");
  const std::size_t step = st.k + 1;
  const bool use_sg = cfg.warm_start == WarmStart::Online && step <= cfg.m;

  Rng batching(cfg.seed, "batching:" + std::to_string(step));
  Rng dropout(cfg.seed, "dropout:" + std::to_string(step));
  const std::size_t n_src = (cfg.batch_size + 1) / 2;
  const std::size_t n_tgt = cfg.batch_size / 2;

  std::vector<TrainPair> for_f;  // (pseudo J, real P)
  std::vector<TrainPair> for_b;  // (pseudo P, real J)
  for (std::size_t i = 0; i < n_tgt; ++i) {
    const TokenSeq& y = tgt.items[batching.index(tgt.items.size())].seq;
    TokenSeq x = use_sg ? summarize_generate(sg.S, sg.G, y, Lang::J, cfg.dropout, dropout)
                        : seq2seq::greedy(st.b, y, Lang::J);
    if (!x.empty()) for_f.push_back(TrainPair{std::move(x), y});
  }
  for (std::size_t i = 0; i < n_src; ++i) {
    const TokenSeq& y = src.items[batching.index(src.items.size())].seq;
    TokenSeq x = use_sg ? summarize_generate(sg.S, sg.G, y, Lang::P, cfg.dropout, dropout)
                        : seq2seq::greedy(st.f, y, Lang::P);
    if (!x.empty()) for_b.push_back(TrainPair{std::move(x), y});
  }

  st.f = train_if_any(std::move(st.f), for_f);
  st.b = train_if_any(std::move(st.b), for_b);
  st.k = step;
  st.log.push_back(StepRecord{step, use_sg ? "sg" : "model", for_f.size(), for_b.size(), std::nullopt});
  return st;
}

TrainState run(const BTConfig& cfg, const Corpora& corpora, const ParallelEvalSet& dev,
               const std::function<void(const StepRecord&)>& on_record) {
  const SgModels sg = train_sg(corpora.bimodal_j, corpora.bimodal_p, cfg.copy_alpha, cfg.smoothing);
  return run(cfg, corpora, dev, sg, on_record);
}

TrainState run(const BTConfig& cfg, const Corpora& corpora, const ParallelEvalSet& dev, const SgModels& sg,
               const std::function<void(const StepRecord&)>& on_record) {
  cfg.validate();
  require_pool(corpora.src, "source");
  require_pool(corpora.tgt, "target");
  TrainState st = initial_state(cfg);
  auto emit = [&](const StepRecord& r) {
    if (on_record) on_record(r);
  };

  StepRecord start{0, "init", 0, 0, std::nullopt};
  evaluate_into(st, dev, start, true);
  st.log.push_back(start);
  emit(start);

  if (cfg.warm_start == WarmStart::Offline) {
    // Pseudo-parallel data for every pool item, one update, then pure BT.
    Rng dropout(cfg.seed, "dropout:offline");
    std::vector<TrainPair> for_f;
    std::vector<TrainPair> for_b;
    for (const auto& it : corpora.tgt.items) {
      TokenSeq x = summarize_generate(sg.S, sg.G, it.seq, Lang::J, cfg.dropout, dropout);
      if (!x.empty()) for_f.push_back(TrainPair{std::move(x), it.seq});
    }
    for (const auto& it : corpora.src.items) {
      TokenSeq x = summarize_generate(sg.S, sg.G, it.seq, Lang::P, cfg.dropout, dropout);
      if (!x.empty()) for_b.push_back(TrainPair{std::move(x), it.seq});
    }
    st.f = train_if_any(std::move(st.f), for_f);
    st.b = train_if_any(std::move(st.b), for_b);
    StepRecord warm{0, "offline_sg", for_f.size(), for_b.size(), std::nullopt};
    evaluate_into(st, dev, warm);
    st.log.push_back(warm);
    emit(warm);
  }

  while (st.k < cfg.steps) {
    st = bt_step(std::move(st), corpora.src, corpora.tgt, sg, cfg);
    if (st.k % cfg.eval_interval == 0 || st.k == cfg.steps) evaluate_into(st, dev, st.log.back());
    emit(st.log.back());
  }
  return st;
}

}  // namespace sgbt::bt
