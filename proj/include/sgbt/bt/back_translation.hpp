#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sgbt/corpus/corpus.hpp"
#include "sgbt/seq2seq/model.hpp"

namespace sgbt::bt {

using corpus::BimodalPair;
using corpus::MonoCorpus;
using corpus::ParallelEvalSet;
using seq2seq::ModelParams;

enum class WarmStart { Online, Offline };
std::string to_string(WarmStart w);
WarmStart warm_start_from_string(const std::string& s);

struct BTConfig {
  std::size_t m = 200;        // steps (1-based) that use S&G pseudo-sources
  std::size_t steps = 2000;   // I
  std::size_t batch_size = 32;
  double dropout = 0.0;
  std::size_t eval_interval = 100;
  std::uint64_t seed = 0;
  WarmStart warm_start = WarmStart::Online;
  double copy_alpha = seq2seq::kDefaultCopyAlpha;
  double smoothing = seq2seq::kDefaultSmoothing;

  /// Throws Error("InvalidArgument") unless m <= steps, batch_size >= 1,
  /// eval_interval >= 1 and dropout in [0, 1].
  void validate() const;
};

struct SgModels {
  ModelParams S;  // code -> pivot, both code languages pooled
  ModelParams G;  // pivot -> code, conditioned on the target tag
};

/// Supervised summarizer/generator from the two bimodal sets.
/// Throws Error("EmptyCorpus") if either is empty.
SgModels train_sg(const std::vector<BimodalPair>& bimodal_j, const std::vector<BimodalPair>& bimodal_p,
                  double copy_alpha = seq2seq::kDefaultCopyAlpha, double smoothing = seq2seq::kDefaultSmoothing);

struct Checkpoint {
  std::size_t step = 0;
  ModelParams f;  // J -> P
  ModelParams b;  // P -> J
  double dev_bleu = 0.0;
};

struct StepRecord {
  std::size_t step = 0;
  std::string provenance;  // "sg", "model", "offline_sg" or "init"
  std::size_t pairs_f = 0;
  std::size_t pairs_b = 0;
  std::optional<double> dev_bleu;
};

struct TrainState {
  std::size_t k = 0;
  ModelParams f;
  ModelParams b;
  Checkpoint best;
  std::vector<StepRecord> log;
};

TrainState initial_state(const BTConfig& cfg);

/// Mean of corpus BLEU for f on J->P and b on P->J, greedy.
double dev_bleu(const ModelParams& f, const ModelParams& b, const ParallelEvalSet& dev);

/// One step of the loop, producing step k+1. Samples half the batch from
/// each pool (with replacement). For k+1 <= m the pseudo-sources come from
/// S&G, otherwise from the current b (for P samples) and f (for J samples).
/// f learns pseudo-J -> real P, b learns pseudo-P -> real J; empty
/// pseudo-sources are skipped. Appends a StepRecord.
/// Throws Error("InvalidArgument") at k == steps, Error("ExhaustedCorpus")
/// on an empty pool.
TrainState bt_step(TrainState state, const MonoCorpus& src, const MonoCorpus& tgt, const SgModels& sg,
                   const BTConfig& cfg);

struct Corpora {
  MonoCorpus src;  // J pool
  MonoCorpus tgt;  // P pool
  std::vector<BimodalPair> bimodal_j;
  std::vector<BimodalPair> bimodal_p;
};

/// Full schedule: S&G training, optional offline warm start, `steps` BT
/// steps, dev BLEU at step 0, every eval_interval steps and at the end. The
/// best checkpoint keeps the earliest maximum.
TrainState run(const BTConfig& cfg, const Corpora& corpora, const ParallelEvalSet& dev,
               const std::function<void(const StepRecord&)>& on_record = {});

/// Same, with S and G supplied by the caller.
TrainState run(const BTConfig& cfg, const Corpora& corpora, const ParallelEvalSet& dev, const SgModels& sg,
               const std::function<void(const StepRecord&)>& on_record = {});

}  // namespace sgbt::bt
