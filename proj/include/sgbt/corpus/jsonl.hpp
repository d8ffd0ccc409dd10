#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sgbt/corpus/corpus.hpp"

namespace sgbt::corpus {

// JSON Lines codecs. Code and summaries travel as canonical rendered text and
// are re-lexed on read; malformed lines raise Error("DataError").

void write_mono(std::ostream& out, const MonoCorpus& corpus);
/// All lines must carry the same lang; an empty stream yields `fallback` with no items.
MonoCorpus read_mono(std::istream& in, Lang fallback = Lang::J);

void write_bimodal(std::ostream& out, const std::vector<BimodalPair>& pairs);
std::vector<BimodalPair> read_bimodal(std::istream& in);

/// Integers that fit in int64 are JSON numbers, larger ones decimal strings.
void write_eval(std::ostream& out, const ParallelEvalSet& set);
ParallelEvalSet read_eval(std::istream& in);

struct Hypothesis {
  TokenSeq seq;
  double logprob = 0.0;
};

struct HypList {
  std::string id;
  std::vector<Hypothesis> hyps;
};

/// Hypotheses are written in the flat token form (model output need not lex);
/// on read, multi-line text is lexed as source so rendered references work too.
void write_hyps(std::ostream& out, const std::vector<HypList>& items);
std::vector<HypList> read_hyps(std::istream& in, Lang lang);

}  // namespace sgbt::corpus
