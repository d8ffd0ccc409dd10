#include "sgbt/bt/setup.hpp"

#include "sgbt/error.hpp"

namespace sgbt::bt {
namespace {

using minilang::Lang;

// Twice the target count leaves ample room for duplicates and discards.
MonoCorpus pool(const SetupConfig& cfg, Lang lang, const char* stream) {
  auto mono = corpus::make_mono(corpus::generate(cfg.seed, 2 * cfg.mono, cfg.depth, stream), lang,
                                corpus::kDefaultMaxLen, stream);
  if (mono.items.size() < cfg.mono) throw Error("DataError", std::string("could not fill the ") + stream + " pool");
  mono.items.resize(cfg.mono);
  return mono;
}

ParallelEvalSet eval_set(const SetupConfig& cfg, std::size_t n, const char* stream) {
  auto set = corpus::make_eval_set(corpus::generate(cfg.seed, 2 * n, cfg.depth, stream), cfg.seed,
                                   corpus::kDefaultTests, minilang::kDefaultStepLimit, stream);
  if (set.pairs.size() < n) throw Error("DataError", std::string("could not fill the ") + stream + " set");
  set.pairs.resize(n);
  return set;
}

}  // namespace

StandardSetup standard_setup(const SetupConfig& cfg) {
  StandardSetup s;
  s.corpora.src = pool(cfg, Lang::J, "mono-j");
  s.corpora.tgt = pool(cfg, Lang::P, "mono-p");
  s.corpora.bimodal_j = corpus::make_bimodal(corpus::generate(cfg.seed, cfg.bimodal, cfg.depth, "bimodal-j"), Lang::J,
                                             "bimodal");
  s.corpora.bimodal_p = corpus::make_bimodal(corpus::generate(cfg.seed, cfg.bimodal, cfg.depth, "bimodal-p"), Lang::P,
                                             "bimodal");
  s.dev = eval_set(cfg, cfg.dev, "dev");
  s.test = eval_set(cfg, cfg.test, "test");
  return s;
}

}  // namespace sgbt::bt
