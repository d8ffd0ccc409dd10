#include <gtest/gtest.h>

#include <cmath>

#include "sgbt/corpus/corpus.hpp"
#include "sgbt/error.hpp"
#include "sgbt/metrics/bleu.hpp"
#include "sgbt/metrics/codebleu.hpp"
#include "sgbt/metrics/report.hpp"
#include "sgbt/minilang/lexer.hpp"
#include "sgbt/minilang/parser.hpp"
#include "sgbt/minilang/printer.hpp"
#include "sgbt/seq2seq/model.hpp"

using namespace sgbt;
using namespace sgbt::metrics;
using minilang::Int;
using minilang::Lang;

namespace {

TokenSeq w(std::string_view s) { return minilang::from_flat(s, Lang::Pivot); }
TokenSeq j(std::string_view s) { return minilang::lex(s, Lang::J); }

std::vector<TokenSeq> refs(std::initializer_list<std::string_view> rs) {
  std::vector<TokenSeq> out;
  for (auto r : rs) out.push_back(w(r));
  return out;
}

corpus::ParallelEvalSet small_eval(std::uint64_t seed, std::size_t n) {
  return corpus::make_eval_set(corpus::generate(seed, n), seed);
}

}  // namespace

// Goldens from tests/oracles/bleu_oracle.py.
TEST(Bleu, Goldens) {
  EXPECT_NEAR(bleu(w("a b c d"), refs({"a b c e"})), 0.0039763536438352535, 1e-9);
  EXPECT_NEAR(bleu(w("the cat sat on the mat"), refs({"the cat is on the mat"})), 0.0025406637407730743, 1e-9);
  EXPECT_NEAR(bleu(w("a a a a"), refs({"a b"})), 8.034284189446515e-08, 1e-9);
  EXPECT_NEAR(bleu(w("x y z w v"), refs({"x y z w v u", "x y z w v u t s r"})), 0.81873075307798193, 1e-9);
  EXPECT_NEAR(bleu(w("a b"), refs({"a b c d e f"})), 0.1353352832366127, 1e-9);
}

TEST(Bleu, CorpusGolden) {
  const std::vector<TokenSeq> hyps{w("a b c d"), w("the cat sat on the mat"), w("x y z w v")};
  const std::vector<std::vector<TokenSeq>> rs{refs({"a b c e"}), refs({"the cat is on the mat"}),
                                              refs({"x y z w v u", "x y z w v u t s r"})};
  EXPECT_NEAR(corpus_bleu(hyps, rs), 0.55103214393409483, 1e-9);
}

TEST(Bleu, Trivial) {
  EXPECT_DOUBLE_EQ(bleu(w("a b c d e"), refs({"a b c d e"})), 1.0);
  EXPECT_LE(bleu(w("a b c d"), refs({"e f g h"})), 1e-6);
  EXPECT_THROW(bleu(TokenSeq{Lang::Pivot, {}}, refs({"a"})), Error);
  EXPECT_THROW(bleu(w("a"), {}), Error);
}

TEST(Bleu, ClosestReferenceTiesToShorter) {
  // |5 - 3| == |5 - 7|: the shorter reference sets r = 3, so no penalty.
  const auto s = bleu_stats(w("a b c d e"), refs({"a b c", "a b c d e f g"}));
  EXPECT_EQ(s.ref_len, 3.0);
}

TEST(ExactMatch, Tokens) {
  EXPECT_EQ(exact_match(w("a b"), refs({"a b"})), 1);
  EXPECT_EQ(exact_match(w("a b"), refs({"a c"})), 0);
  EXPECT_EQ(exact_match(j("func f(a){return a;}"), {j("func   f ( a )\n{ return a ; }")}), 1);
}

TEST(CodeBleu, IdentityIsOne) {
  for (const auto& fn : corpus::generate(8, 100)) {
    for (Lang l : {Lang::J, Lang::P}) {
      const auto x = minilang::print(fn, l);
      const auto r = codebleu(x, x);
      ASSERT_EQ(r.score, 1.0);
      ASSERT_EQ(r.ngram, 1.0);
      ASSERT_EQ(r.weighted_ngram, 1.0);
      ASSERT_EQ(r.syntax, 1.0);
      ASSERT_EQ(r.dataflow, 1.0);
    }
  }
}

TEST(CodeBleu, UnparsableHypothesis) {
  const auto ref = j("func f(a){ let x = a + 1; return x * 2; }");
  const auto hyp = j("func f(a){ let x = a + 1; return x * ; }");
  const auto r = codebleu(hyp, ref);
  EXPECT_EQ(r.syntax, 0.0);
  EXPECT_EQ(r.dataflow, 0.0);
  EXPECT_GT(r.ngram, 0.0);
  EXPECT_DOUBLE_EQ(r.score, 0.25 * r.ngram + 0.25 * r.weighted_ngram);
}

TEST(CodeBleu, RenamedHypothesis) {
  const auto ref = j("func f(a, b){ let x = a + b; if (x > 3) { x = x - b; } return x; }");
  const auto hyp = j("func f(p, q){ let t = p + q; if (t > 3) { t = t - q; } return t; }");
  const auto r = codebleu(hyp, ref);
  EXPECT_EQ(r.syntax, 1.0);
  EXPECT_EQ(r.dataflow, 1.0);
  EXPECT_LT(r.ngram, 1.0);
  EXPECT_LT(r.weighted_ngram, 1.0);
}

// Goldens from the weighted variant in tests/oracles/bleu_oracle.py.
TEST(CodeBleu, KeywordWeightedNgram) {
  const auto ref = j("func f(a){ let x = a; return x; }");
  const auto renamed = j("func f(a){ let y = a; return y; }");
  const auto r = codebleu(renamed, ref);
  EXPECT_NEAR(r.ngram, 0.61047358358078441, 1e-9);
  EXPECT_NEAR(r.weighted_ngram, 0.56437515132915073, 1e-9);
  EXPECT_DOUBLE_EQ(codebleu(renamed, ref, {}, 1.0).weighted_ngram, r.ngram);
}

TEST(CodeBleu, Errors) {
  const auto ok = j("func f(a){ return a; }");
  EXPECT_THROW(codebleu(ok, j("func f(a){ return ; }")), Error);
  EXPECT_THROW(codebleu(ok, ok, {0.5, 0.5, 0.5, -0.5}), Error);
  EXPECT_THROW(codebleu(ok, ok, {0.5, 0.5, 0.5, 0.5}), Error);
}

TEST(CodeBleu, SubtreeLabels) {
  const auto fn = minilang::parse(j("func f(a){ return a + 1; }"));
  const auto st = subtrees(fn, 3);
  EXPECT_EQ(st.at("ID"), 2);
  EXPECT_EQ(st.at("LIT"), 1);
  EXPECT_EQ(st.at("(Binary+ ID LIT)"), 1);
  EXPECT_EQ(st.at("(Return (Binary+ ID LIT))"), 1);
}

TEST(Accuracy, Outcomes) {
  const std::vector<corpus::TestCase> tests{{{Int(1)}, Int(2)}, {{Int(0)}, Int(1)}};
  EXPECT_EQ(run_tests(j("func f(a){ return a + 1; }"), tests), Outcome::Success);
  EXPECT_EQ(run_tests(j("func f(a){ return a * 2; }"), tests), Outcome::Failure);
  EXPECT_EQ(run_tests(j("func f(a){ return 2 / a; }"), tests), Outcome::Error);  // passes test 1, then 2/0
  EXPECT_EQ(run_tests(j("func f(a){ return a / 0; }"), tests), Outcome::Error);
  EXPECT_EQ(run_tests(j("func f(a){ while (0 < 1) { a = a; } return a; }"), tests), Outcome::Timeout);
  EXPECT_EQ(run_tests(j("func f(a, b){ return a; }"), tests), Outcome::Error);
  EXPECT_EQ(run_tests(minilang::from_flat("func f ( a ) {", Lang::J), tests), Outcome::Error);
}

TEST(Accuracy, FirstFaultDecides) {
  // Test 1 times out before test 2 would divide by zero, so Timeout wins.
  const auto hyp = j("func f(a){ while (a > 0) { a = a; } return 1 / a; }");
  const std::vector<corpus::TestCase> tests{{{Int(1)}, Int(0)}, {{Int(0)}, Int(0)}};
  EXPECT_EQ(run_tests(hyp, tests), Outcome::Timeout);
  const std::vector<corpus::TestCase> flipped{tests[1], tests[0]};
  EXPECT_EQ(run_tests(hyp, flipped), Outcome::Error);
}

TEST(Accuracy, ReferencesAreFullyCorrect) {
  const auto ev = small_eval(3, 40);
  for (const Direction dir : {Direction{Lang::J, Lang::P}, Direction{Lang::P, Lang::J}}) {
    std::vector<std::vector<TokenSeq>> hyps;
    for (const auto& p : ev.pairs) hyps.push_back(std::vector<TokenSeq>(10, dir.target_of(p)));
    const auto r = computational_accuracy(hyps, ev, dir, minilang::kDefaultStepLimit, default_ca_configs());
    for (const auto& [c, v] : r.ca) EXPECT_EQ(v, 1.0) << c.key();
    EXPECT_EQ(r.outcomes.success, ev.pairs.size());
    EXPECT_EQ(r.outcomes.exact_match_within_success, ev.pairs.size());
  }
}

TEST(Accuracy, NestedConfigsAndBeamTooSmall) {
  const auto ev = small_eval(4, 30);
  const Direction dir{Lang::J, Lang::P};
  std::vector<std::vector<TokenSeq>> hyps;
  for (std::size_t i = 0; i < ev.pairs.size(); ++i) {
    // Correct answer at rank i % 12, or never when that is >= 10.
    std::vector<TokenSeq> list(10, j("func f(a){ return 0 - 1234567; }"));
    if (i % 12 < 10) list[i % 12] = ev.pairs[i].p;
    hyps.push_back(std::move(list));
  }
  const auto r = computational_accuracy(hyps, ev, dir, minilang::kDefaultStepLimit, default_ca_configs());
  EXPECT_GE(r.ca.at({10, 10}), r.ca.at({5, 5}));
  EXPECT_GE(r.ca.at({5, 5}), r.ca.at({1, 10}));
  EXPECT_GE(r.ca.at({1, 10}), r.ca.at({1, 1}));
  EXPECT_GT(r.ca.at({10, 10}), r.ca.at({1, 1}));
  hyps[0].resize(5);
  try {
    computational_accuracy(hyps, ev, dir, minilang::kDefaultStepLimit, default_ca_configs());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "BeamTooSmall");
  }
}

TEST(Report, IdentityTaskAndDeterminism) {
  const auto ev = small_eval(5, 30);
  EvalConfig cfg{Direction{Lang::J, Lang::J}};
  const auto theta = seq2seq::init();
  const auto r = evaluate_all(theta, ev, cfg);
  EXPECT_EQ(r.bleu, 1.0);
  EXPECT_EQ(r.em, 1.0);
  EXPECT_EQ(r.ca.at({1, 1}), 1.0);
  EXPECT_EQ(canonical_dump(to_json(r)), canonical_dump(to_json(evaluate_all(theta, ev, cfg))));
}

TEST(Report, CrossLanguageCopyScoresZero) {
  const auto ev = small_eval(6, 30);
  const auto r = evaluate_all(seq2seq::init(), ev, EvalConfig{Direction{Lang::J, Lang::P}});
  EXPECT_EQ(r.em, 0.0);
  for (const auto& [c, v] : r.ca) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(r.outcomes.total(), ev.pairs.size());
  for (double v : {r.bleu, r.codebleu.score, r.codebleu.ngram, r.codebleu.syntax}) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(Report, CanonicalDump) {
  const nlohmann::json doc{{"b", 1.0 / 3.0}, {"a", {{"z", 2}, {"y", true}}}, {"c", nlohmann::json::array({0.5})}};
  EXPECT_EQ(canonical_dump(doc, -1), R"({"a":{"y":true,"z":2},"b":0.333333,"c":[0.500000]})");
  EXPECT_EQ(canonical_dump(nlohmann::json{{"k", 1.0}}), "{\n  \"k\": 1.000000\n}");
}
