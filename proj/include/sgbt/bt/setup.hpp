#pragma once

#include <cstdint>

#include "sgbt/bt/back_translation.hpp"

namespace sgbt::bt {

struct SetupConfig {
  std::uint64_t seed = 7;
  std::size_t mono = 2000;     // per language, after dedup
  std::size_t bimodal = 1000;  // per language
  std::size_t dev = 100;
  std::size_t test = 100;
  int depth = 3;
};

struct StandardSetup {
  Corpora corpora;
  ParallelEvalSet dev;
  ParallelEvalSet test;
};

/// The synthetic experiment: disjoint generator streams for the J pool, the
/// P pool, both bimodal sets, dev and test; every set is filled to its exact
/// size (eval sets after discards).
StandardSetup standard_setup(const SetupConfig& cfg = {});

}  // namespace sgbt::bt
