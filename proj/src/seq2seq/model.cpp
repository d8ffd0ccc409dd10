#include "sgbt/seq2seq/model.hpp"

#include <algorithm>
#include <array>

#include "sgbt/error.hpp"
#include "sgbt/seq2seq/align.hpp"

namespace sgbt::seq2seq {
namespace {

std::array<std::string, 3> keys(const Context& c, Lang target) {
  const std::string lang(minilang::to_string(target));
  return {lang + " 0 " + c.cur, lang + " 1 " + c.left + " " + c.cur + " " + c.right,
          lang + " 2 " + c.left + " " + c.cur + " " + c.right + " " + c.right2 + " " + c.block};
}

void add(CountTable& table, const Context& c, Lang target, const std::string& op, double w) {
  for (const auto& k : keys(c, target)) {
    auto& cell = table[k];
    cell.ops[op] += w;
    cell.total += w;
  }
}

const OpCounts* find(const CountTable& table, const std::string& key) {
  auto it = table.find(key);
  return it == table.end() ? nullptr : &it->second;
}

double count_of(const OpCounts* c, const std::string& op) {
  if (!c) return 0.0;
  auto it = c->ops.find(op);
  return it == c->ops.end() ? 0.0 : it->second;
}

// Bottom level: additive smoothing plus the copy prior on `default_op`.
// Upper levels interpolate toward their parent with strength `backoff`.
std::vector<OpProb> distribution(const ModelParams& theta, const CountTable& table, const Context& c, Lang target,
                                 const std::string& default_op, const std::vector<std::string>& always,
                                 bool (*keep)(const std::string&)) {
  const auto k = keys(c, target);
  const OpCounts* levels[3] = {find(table, k[0]), find(table, k[1]), find(table, k[2])};

  std::vector<std::string> ops = always;
  if (levels[0])
    for (const auto& [op, w] : levels[0]->ops)
      if (keep(op)) ops.push_back(op);
  std::sort(ops.begin(), ops.end());
  ops.erase(std::unique(ops.begin(), ops.end()), ops.end());

  const double eps = theta.smoothing;
  const double alpha = theta.copy_alpha;
  const double total0 = levels[0] ? levels[0]->total : 0.0;
  const double denom0 = total0 + alpha + eps * static_cast<double>(ops.size());

  std::vector<OpProb> out;
  out.reserve(ops.size());
  for (const auto& op : ops) {
    double p = (count_of(levels[0], op) + (op == default_op ? alpha : 0.0) + eps) / denom0;
    for (int lvl = 1; lvl < 3; ++lvl) {
      if (!levels[lvl]) continue;
      p = (count_of(levels[lvl], op) + theta.backoff * p) / (levels[lvl]->total + theta.backoff);
    }
    out.push_back(OpProb{op, p});
  }
  std::stable_sort(out.begin(), out.end(), [](const OpProb& a, const OpProb& b) { return a.p > b.p; });
  return out;
}

bool is_primary(const std::string& op) { return op == kDelOp || op.rfind("sub:", 0) == 0; }
bool is_insertion(const std::string& op) { return op == kNoneOp || op.rfind("ins:", 0) == 0; }

}  // namespace

std::string sub_op(std::string_view text) { return "sub:" + std::string(text); }

std::string ins_op(const std::vector<std::string>& phrase) {
  std::string out = "ins:";
  for (std::size_t i = 0; i < phrase.size(); ++i) {
    if (i) out += ' ';
    out += phrase[i];
  }
  return out;
}

std::vector<std::string> op_output(std::string_view op) {
  std::vector<std::string> out;
  if (op.rfind("sub:", 0) == 0) {
    out.emplace_back(op.substr(4));
  } else if (op.rfind("ins:", 0) == 0) {
    std::string_view rest = op.substr(4);
    while (!rest.empty()) {
      const auto sp = rest.find(' ');
      out.emplace_back(rest.substr(0, sp));
      if (sp == std::string_view::npos) break;
      rest.remove_prefix(sp + 1);
    }
  }
  return out;
}

ModelParams init(double copy_alpha, double smoothing) {
  if (!(copy_alpha > 0.0)) throw Error("InvalidArgument", "copy_alpha must be > 0");
  if (!(smoothing > 0.0)) throw Error("InvalidArgument", "smoothing must be > 0");
  ModelParams theta;
  theta.copy_alpha = copy_alpha;
  theta.smoothing = smoothing;
  return theta;
}

ModelParams train_update(ModelParams theta, const std::vector<TrainPair>& batch, double weight) {
  if (batch.empty()) throw Error("EmptyBatch", "train_update needs at least one pair");
  if (!(weight > 0.0)) throw Error("InvalidArgument", "weight must be > 0");
  for (const auto& pair : batch) {
    const auto ops = align(pair.src, pair.tgt);
    const Lang target = pair.tgt.lang;
    const auto ctx = contexts(pair.src);
    const std::size_t n = pair.src.size();

    std::vector<std::string> primary(n);
    std::vector<std::vector<std::string>> inserted(n + 1);  // slot 0 = before the first token
    for (const auto& op : ops) {
      switch (op.kind) {
        case OpKind::Sub: primary[static_cast<std::size_t>(op.src)] = sub_op(op.text); break;
        case OpKind::Del: primary[static_cast<std::size_t>(op.src)] = kDelOp; break;
        case OpKind::Ins: inserted[static_cast<std::size_t>(op.src + 1)].push_back(op.text); break;
      }
    }
    auto ins_or_none = [&](std::size_t slot) { return inserted[slot].empty() ? kNoneOp : ins_op(inserted[slot]); };

    add(theta.insertion, bos_context(pair.src), target, ins_or_none(0), weight);
    for (std::size_t i = 0; i < n; ++i) {
      add(theta.primary, ctx[i], target, primary[i], weight);
      add(theta.insertion, ctx[i], target, ins_or_none(i + 1), weight);
    }
    auto& vocab = theta.vocab[target];
    for (const auto& t : pair.tgt.tokens) vocab.insert(t.text);
  }
  return theta;
}

std::vector<OpProb> primary_distribution(const ModelParams& theta, const Context& ctx, Lang target) {
  const std::string copy = sub_op(ctx.cur);
  return distribution(theta, theta.primary, ctx, target, copy, {copy, kDelOp}, is_primary);
}

std::vector<OpProb> insertion_distribution(const ModelParams& theta, const Context& ctx, Lang target) {
  return distribution(theta, theta.insertion, ctx, target, kNoneOp, {kNoneOp}, is_insertion);
}

}  // namespace sgbt::seq2seq
