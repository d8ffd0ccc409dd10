#include "sgbt/metrics/codebleu.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "sgbt/error.hpp"
#include "sgbt/metrics/bleu.hpp"
#include "sgbt/minilang/dataflow.hpp"
#include "sgbt/minilang/parser.hpp"

namespace sgbt::metrics {
namespace {

using namespace minilang;

struct Node {
  std::string label;
  std::vector<Node> kids;
};

Node leaf(std::string label) { return Node{std::move(label), {}}; }

Node expr_node(const Expr& e) {
  return std::visit(
      [](const auto& n) -> Node {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          return leaf("LIT");
        } else if constexpr (std::is_same_v<T, Var>) {
          return leaf("ID");
        } else if constexpr (std::is_same_v<T, Binary>) {
          return Node{"Binary" + std::string(symbol(n.op)), {expr_node(*n.lhs), expr_node(*n.rhs)}};
        } else {
          Node out{"Call" + std::string(name(n.fn)), {}};
          for (const auto& a : n.args) out.kids.push_back(expr_node(a));
          return out;
        }
      },
      e.node);
}

Node block_node(const Block& b);

Node stmt_node(const Stmt& s) {
  return std::visit(
      [](const auto& n) -> Node {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Let>) {
          return Node{"Let", {leaf("ID"), expr_node(n.value)}};
        } else if constexpr (std::is_same_v<T, Assign>) {
          return Node{"Assign", {leaf("ID"), expr_node(n.value)}};
        } else if constexpr (std::is_same_v<T, If>) {
          Node out{"If", {expr_node(n.cond), block_node(n.then_body)}};
          if (n.else_body) out.kids.push_back(block_node(*n.else_body));
          return out;
        } else if constexpr (std::is_same_v<T, While>) {
          return Node{"While", {expr_node(n.cond), block_node(n.body)}};
        } else {
          return Node{"Return", {expr_node(n.value)}};
        }
      },
      s.node);
}

Node block_node(const Block& b) {
  Node out{"Block", {}};
  for (const auto& s : b) out.kids.push_back(stmt_node(s));
  return out;
}

int height(const Node& n) {
  int h = 0;
  for (const auto& k : n.kids) h = std::max(h, height(k));
  return h + 1;
}

std::string render(const Node& n, int depth) {
  if (depth == 1 || n.kids.empty()) return n.label;
  std::string out = "(" + n.label;
  for (const auto& k : n.kids) out += " " + render(k, depth - 1);
  return out + ")";
}

void collect(const Node& n, int max_depth, std::map<std::string, int>& out) {
  const int top = std::min(max_depth, height(n));
  for (int d = 1; d <= top; ++d) ++out[render(n, d)];
  for (const auto& k : n.kids) collect(k, max_depth, out);
}

std::optional<Function> try_parse(const TokenSeq& ts) {
  if (ts.empty()) return std::nullopt;
  try {
    return parse(ts);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

std::map<std::string, int> subtrees(const Function& fn, int max_depth) {
  Node root{"Function", {}};
  for (std::size_t i = 0; i < fn.params.size(); ++i) root.kids.push_back(leaf("ID"));
  root.kids.push_back(block_node(fn.body));
  std::map<std::string, int> out;
  collect(root, max_depth, out);
  return out;
}

CodeBleuResult codebleu(const TokenSeq& hyp, const TokenSeq& ref, const CodeBleuWeights& w, double keyword_weight) {
  const double ws[] = {w.ngram, w.weighted_ngram, w.syntax, w.dataflow};
  double sum = 0.0;
  for (double x : ws) {
    if (!(x >= 0.0)) throw Error("InvalidArgument", "codebleu weights must be >= 0");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw Error("InvalidArgument", "codebleu weights must sum to 1");

  const auto ref_ast = try_parse(ref);
  if (!ref_ast) throw Error("UnparsableReference", "codebleu reference does not parse");

  CodeBleuResult r;
  if (!hyp.empty()) {
    const std::vector<TokenSeq> refs{ref};
    r.ngram = bleu_from_stats(bleu_stats(hyp, refs));
    r.weighted_ngram = bleu_from_stats(bleu_stats(hyp, refs, [&](std::string_view t) {
      return minilang::is_keyword(t, Lang::J) || minilang::is_keyword(t, Lang::P) ? keyword_weight : 1.0;
    }));
  }
  if (const auto hyp_ast = try_parse(hyp)) {
    const auto hs = subtrees(*hyp_ast);
    const auto rs = subtrees(*ref_ast);
    int common = 0;
    int total = 0;
    for (const auto& [label, c] : hs) {
      total += c;
      auto it = rs.find(label);
      if (it != rs.end()) common += std::min(c, it->second);
    }
    r.syntax = static_cast<double>(common) / static_cast<double>(total);

    const auto he = dataflow_edges(*hyp_ast);
    const auto re = dataflow_edges(*ref_ast);
    if (re.empty()) {
      r.dataflow = he.empty() ? 1.0 : 0.0;
    } else {
      std::size_t both = 0;
      for (const auto& e : he) both += re.count(e);
      r.dataflow = static_cast<double>(both) / static_cast<double>(re.size());
    }
  }
  r.score = w.ngram * r.ngram + w.weighted_ngram * r.weighted_ngram + w.syntax * r.syntax + w.dataflow * r.dataflow;
  return r;
}

}  // namespace sgbt::metrics
