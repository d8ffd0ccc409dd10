#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "sgbt/bt/back_translation.hpp"
#include "sgbt/corpus/corpus.hpp"
#include "sgbt/embed/embed.hpp"
#include "sgbt/error.hpp"
#include "sgbt/minilang/printer.hpp"

using namespace sgbt;
using embed::build_space;
using embed::cosine;
using embed::Embedding;
using embed::export_embeddings;
using embed::Item;
using embed::mapped_tokens;
using embed::parallel_retrieval_error;
using embed::retrieval_error_rate;
using minilang::Lang;
using minilang::TokenSeq;

namespace {

TokenSeq w(std::string_view s, Lang l = Lang::J) { return minilang::from_flat(s, l); }

Embedding one_hot(std::size_t i, std::size_t n) {
  Embedding e(n, 0.0);
  e[i] = 1.0;
  return e;
}

}  // namespace

TEST(Embed, SingleTokenIsUnitBasis) {
  const auto space = build_space({w("return"), w("x")}, nullptr);
  const auto e = embed::embed(w("x"), nullptr, space);
  EXPECT_EQ(e, (Embedding{0.0, 1.0}));
  EXPECT_THROW(embed::embed(TokenSeq{}, nullptr, space), Error);
  EXPECT_THROW(embed::embed(w("zzz"), nullptr, space), Error);
}

TEST(Embed, NormalizedBag) {
  const auto space = build_space({w("a a b")}, nullptr);
  const auto e = embed::embed(w("a a b"), nullptr, space);
  EXPECT_NEAR(e[0], 2.0 / std::sqrt(5.0), 1e-12);
  EXPECT_NEAR(e[1], 1.0 / std::sqrt(5.0), 1e-12);
}

TEST(Cosine, Basics) {
  EXPECT_DOUBLE_EQ(cosine({1, 0}, {1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(cosine({1, 0}, {0, 1}), 0.0);
  EXPECT_DOUBLE_EQ(cosine({1, 2}, {3, 4}), cosine({3, 4}, {1, 2}));
  EXPECT_THROW(cosine({1}, {1, 0}), Error);
}

TEST(Retrieval, IdentityAndPermutation) {
  std::vector<Embedding> q{one_hot(0, 3), one_hot(1, 3), one_hot(2, 3)};
  EXPECT_EQ(retrieval_error_rate(q, q, {0, 1, 2}), 0.0);
  EXPECT_EQ(retrieval_error_rate(q, q, {1, 2, 0}), 1.0);
  // Scaling every vector leaves the result unchanged.
  auto scaled = q;
  for (auto& e : scaled)
    for (auto& v : e) v *= 7.5;
  EXPECT_EQ(retrieval_error_rate(scaled, q, {1, 2, 0}), 1.0);
  EXPECT_EQ(retrieval_error_rate(scaled, scaled, {0, 1, 2}), 0.0);
}

TEST(Retrieval, TiesGoToLowerIndex) {
  std::vector<Embedding> q{{1, 0}, {1, 0}};
  EXPECT_EQ(retrieval_error_rate(q, q, {0, 1}), 0.5);
}

TEST(Retrieval, Preconditions) {
  std::vector<Embedding> q{one_hot(0, 2), one_hot(1, 2)};
  EXPECT_THROW(retrieval_error_rate({q[0]}, {q[0]}, {0}), Error);
  EXPECT_THROW(retrieval_error_rate(q, q, {0, 0}), Error);
  EXPECT_THROW(retrieval_error_rate(q, q, {0}), Error);
}

TEST(Embed, TrainedMappingAlignsSurfaces) {
  const auto fns = corpus::generate(12, 300, 3, "bimodal");
  const auto sg = bt::train_sg(corpus::make_bimodal(fns, Lang::J), corpus::make_bimodal(fns, Lang::P));
  std::vector<TokenSeq> js, ps;
  for (const auto& fn : corpus::generate(12, 100, 3, "probe")) {
    js.push_back(minilang::print(fn, Lang::J));
    ps.push_back(minilang::print(fn, Lang::P));
  }
  std::vector<TokenSeq> all = js;
  all.insert(all.end(), ps.begin(), ps.end());
  const auto raw = build_space(all, nullptr), mapped = build_space(all, &sg.S);
  double raw_sum = 0, mapped_sum = 0;
  for (std::size_t i = 0; i < js.size(); ++i) {
    raw_sum += cosine(embed::embed(js[i], nullptr, raw), embed::embed(ps[i], nullptr, raw));
    mapped_sum += cosine(embed::embed(js[i], &sg.S, mapped), embed::embed(ps[i], &sg.S, mapped));
  }
  EXPECT_GT(mapped_sum, raw_sum);
  EXPECT_LE(parallel_retrieval_error(js, ps, &sg.S), parallel_retrieval_error(js, ps, nullptr));
  // Under the mapping, surface keywords land on pivot words.
  const auto toks = mapped_tokens(w("func f ( a ) { return a ; }"), &sg.S);
  EXPECT_EQ(toks.front(), "function");
}

TEST(Export, CsvShape) {
  std::vector<Item> items{{"b", w("func f ( a ) { return a ; }")},
                          {"a", minilang::from_flat("def f ( a ) : indent return a dedent", Lang::P)}};
  std::ostringstream out;
  export_embeddings(out, items, nullptr);
  const std::string csv = out.str();
  std::istringstream lines(csv);
  std::string header, row1, row2, extra;
  std::getline(lines, header);
  std::getline(lines, row1);
  std::getline(lines, row2);
  EXPECT_FALSE(std::getline(lines, extra));
  EXPECT_EQ(header.rfind("id,lang,dim_0,", 0), 0u);
  EXPECT_EQ(row1.rfind("a,p,", 0), 0u);
  EXPECT_EQ(row2.rfind("b,j,", 0), 0u);
  std::ostringstream again;
  export_embeddings(again, items, nullptr);
  EXPECT_EQ(again.str(), csv);
  std::ostringstream empty;
  export_embeddings(empty, {}, nullptr);
  EXPECT_EQ(empty.str(), "id,lang\n");
}
