#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "sgbt/minilang/token.hpp"
#include "sgbt/seq2seq/model.hpp"

namespace sgbt::embed {

using minilang::TokenSeq;
using seq2seq::ModelParams;

using Embedding = std::vector<double>;

/// Token texts a sequence contributes. Without a model these are the raw
/// texts; with one, each token becomes its most probable substitution toward
/// the pivot language in its context (deletions are passed over).
std::vector<std::string> mapped_tokens(const TokenSeq& x, const ModelParams* theta);

/// Shared dimension layout: the sorted set of mapped texts over `items`.
struct Space {
  std::map<std::string, std::size_t> index;
  std::size_t dim() const { return index.size(); }
};
Space build_space(const std::vector<TokenSeq>& items, const ModelParams* theta);

/// L2-normalized bag of mapped tokens. Texts outside the space are ignored.
/// Throws Error("EmptyInput") for an empty sequence or an all-zero vector.
Embedding embed(const TokenSeq& x, const ModelParams* theta, const Space& space);

/// Throws Error("DimensionMismatch").
double cosine(const Embedding& a, const Embedding& b);

/// Share of queries whose most similar candidate (lowest index on ties) is not
/// candidates[gold[i]]. Needs equal sizes >= 2 and a bijective gold.
double retrieval_error_rate(const std::vector<Embedding>& queries, const std::vector<Embedding>& candidates,
                            const std::vector<std::size_t>& gold);

/// Retrieval over aligned lists: queries[i] should find candidates[i]. The
/// space is built over both lists together.
double parallel_retrieval_error(const std::vector<TokenSeq>& queries, const std::vector<TokenSeq>& candidates,
                                const ModelParams* theta);

struct Item {
  std::string id;
  TokenSeq seq;
};

/// CSV `id,lang,dim_0,...` with one row per item in id order. The space is
/// built from the items themselves; no items gives a header-only file.
void export_embeddings(std::ostream& out, const std::vector<Item>& items, const ModelParams* theta);

}  // namespace sgbt::embed
