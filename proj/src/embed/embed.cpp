#include "sgbt/embed/embed.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <set>

#include "sgbt/error.hpp"
#include "sgbt/seq2seq/features.hpp"

namespace sgbt::embed {

std::vector<std::string> mapped_tokens(const TokenSeq& x, const ModelParams* theta) {
  std::vector<std::string> out;
  if (!theta) {
    for (const auto& t : x.tokens) out.push_back(t.text);
    return out;
  }
  for (const auto& ctx : seq2seq::contexts(x)) {
    // Distribution comes sorted best first; take the first substitution.
    for (const auto& op : seq2seq::primary_distribution(*theta, ctx, minilang::Lang::Pivot)) {
      if (op.op == seq2seq::kDelOp) continue;
      out.push_back(seq2seq::op_output(op.op).front());
      break;
    }
  }
  return out;
}

Space build_space(const std::vector<TokenSeq>& items, const ModelParams* theta) {
  std::set<std::string> texts;
  for (const auto& x : items)
    for (auto& t : mapped_tokens(x, theta)) texts.insert(std::move(t));
  Space s;
  for (const auto& t : texts) s.index.emplace(t, s.index.size());
  return s;
}

Embedding embed(const TokenSeq& x, const ModelParams* theta, const Space& space) {
  if (x.empty()) throw Error("EmptyInput", "cannot embed an empty sequence");
  Embedding v(space.dim(), 0.0);
  for (const auto& t : mapped_tokens(x, theta)) {
    auto it = space.index.find(t);
    if (it != space.index.end()) v[it->second] += 1.0;
  }
  double norm = 0.0;
  for (double c : v) norm += c * c;
  if (norm == 0.0) throw Error("EmptyInput", "sequence has no tokens in the embedding space");
  norm = std::sqrt(norm);
  for (double& c : v) c /= norm;
  return v;
}

double cosine(const Embedding& a, const Embedding& b) {
  if (a.size() != b.size()) throw Error("DimensionMismatch", "embeddings differ in dimension");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

double retrieval_error_rate(const std::vector<Embedding>& queries, const std::vector<Embedding>& candidates,
                            const std::vector<std::size_t>& gold) {
  const std::size_t n = queries.size();
  if (n < 2 || candidates.size() != n || gold.size() != n)
    throw Error("InvalidArgument", "retrieval needs equally sized query, candidate and gold lists of length >= 2");
  std::vector<bool> hit(n, false);
  for (std::size_t g : gold) {
    if (g >= n || hit[g]) throw Error("InvalidArgument", "gold must be a bijection");
    hit[g] = true;
  }
  std::size_t errors = 0;
  for (std::size_t q = 0; q < n; ++q) {
    std::size_t best = 0;
    double best_sim = -2.0;
    for (std::size_t c = 0; c < n; ++c) {
      const double s = cosine(queries[q], candidates[c]);
      if (s > best_sim) {
        best_sim = s;
        best = c;
      }
    }
    if (best != gold[q]) ++errors;
  }
  return static_cast<double>(errors) / static_cast<double>(n);
}

double parallel_retrieval_error(const std::vector<TokenSeq>& queries, const std::vector<TokenSeq>& candidates,
                                const ModelParams* theta) {
  std::vector<TokenSeq> all = queries;
  all.insert(all.end(), candidates.begin(), candidates.end());
  const Space space = build_space(all, theta);
  std::vector<Embedding> q, c;
  for (const auto& x : queries) q.push_back(embed(x, theta, space));
  for (const auto& x : candidates) c.push_back(embed(x, theta, space));
  std::vector<std::size_t> gold(queries.size());
  for (std::size_t i = 0; i < gold.size(); ++i) gold[i] = i;
  return retrieval_error_rate(q, c, gold);
}

void export_embeddings(std::ostream& out, const std::vector<Item>& items, const ModelParams* theta) {
  std::vector<const Item*> sorted;
  std::vector<TokenSeq> seqs;
  for (const auto& it : items) {
    sorted.push_back(&it);
    seqs.push_back(it.seq);
  }
  std::stable_sort(sorted.begin(), sorted.end(), [](const Item* a, const Item* b) { return a->id < b->id; });
  const Space space = build_space(seqs, theta);

  out << "id,lang";
  for (std::size_t d = 0; d < space.dim(); ++d) out << ",dim_" << d;
  out << '\n';
  for (const Item* it : sorted) {
    out << it->id << ',' << minilang::to_string(it->seq.lang);
    for (double v : embed(it->seq, theta, space)) {
      char buf[32];
      auto res = std::to_chars(buf, buf + sizeof buf, v);
      out << ',' << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
    }
    out << '\n';
  }
}

}  // namespace sgbt::embed
