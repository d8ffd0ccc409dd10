#include <algorithm>
#include <array>

#include "sgbt/corpus/corpus.hpp"
#include "sgbt/rng.hpp"

namespace sgbt::corpus {
namespace {

using namespace minilang;

constexpr std::array<const char*, 3> kParams = {"a", "b", "c"};
constexpr std::array<const char*, 4> kLocals = {"x", "y", "z", "w"};
constexpr std::array<const char*, 4> kNames = {"f", "g", "h", "k"};

template <std::size_t N>
std::size_t weighted(Rng& rng, const std::array<int, N>& weights) {
  int total = 0;
  for (int w : weights) total += w;
  auto r = rng.uniform(0, total - 1);
  for (std::size_t i = 0; i < N; ++i) {
    if (r < weights[i]) return i;
    r -= weights[i];
  }
  return N - 1;
}

// Builds one function. Every builder reports how many statements (nested
// ones included) it produced so the total stays within 1..8.
class Generator {
 public:
  Generator(Rng& rng, int depth) : rng_(rng), depth_(std::max(depth, 1)) {}

  Function function() {
    Function fn;
    fn.name = kNames[rng_.index(kNames.size())];
    const auto n_params = static_cast<std::size_t>(rng_.uniform(1, 3));
    for (std::size_t i = 0; i < n_params; ++i) fn.params.emplace_back(kParams[i]);
    bound_.assign(fn.params.begin(), fn.params.end());
    free_locals_.assign(kLocals.begin(), kLocals.end());

    int budget = static_cast<int>(rng_.uniform(1, 8));
    const bool with_return = rng_.bernoulli(0.95);
    if (with_return) --budget;
    if (!with_return && budget == 0) budget = 1;
    while (budget > 0) {
      // let-new, top-level re-assign, if, while
      const std::array<int, 4> weights = {free_locals_.empty() ? 0 : 6, 1, budget >= 2 ? 2 : 0,
                                          budget >= 2 ? 2 : 0};
      int used = 1;
      switch (weighted(rng_, weights)) {
        case 0: fn.body.push_back(let_new()); break;
        case 1: fn.body.push_back(assign(bound_)); break;
        case 2: fn.body.push_back(if_stmt(budget, used)); break;
        default: fn.body.push_back(while_stmt(budget, used)); break;
      }
      budget -= used;
    }
    if (with_return) fn.body.push_back(Stmt{Return{arith(depth_)}});
    return fn;
  }

 private:
  Stmt let_new() {
    const auto i = rng_.index(free_locals_.size());
    std::string name = free_locals_[i];
    free_locals_.erase(free_locals_.begin() + static_cast<std::ptrdiff_t>(i));
    Expr value = arith(depth_);
    bound_.push_back(name);
    return Stmt{Let{std::move(name), std::move(value)}};
  }

  Stmt assign(const std::vector<std::string>& targets) {
    std::string target = targets[rng_.index(targets.size())];
    return Stmt{Assign{std::move(target), arith(depth_)}};
  }

  Block block(int available, int& used) {
    const int n = static_cast<int>(rng_.uniform(1, std::clamp(available, 1, 2)));
    Block body;
    for (int i = 0; i < n; ++i) {
      if (i == n - 1 && rng_.bernoulli(0.15)) {
        body.push_back(Stmt{Return{arith(depth_)}});
      } else {
        body.push_back(assign(bound_));
      }
      ++used;
    }
    return body;
  }

  Stmt if_stmt(int available, int& used) {
    used = 1;
    Expr cond = comparison();
    If node{std::move(cond), block(available - used, used), std::nullopt};
    if (available - used >= 1 && rng_.bernoulli(0.5)) node.else_body = block(available - used, used);
    return Stmt{std::move(node)};
  }

  // Counter loops that terminate for any start value: `while (v > L) { ...; v = v - K; }`
  // or the ascending mirror, with the counter untouched elsewhere in the body.
  Stmt while_stmt(int available, int& used) {
    const std::string counter = bound_[rng_.index(bound_.size())];
    const bool down = rng_.bernoulli(0.5);
    Expr cond = down ? bin(BinOp::Gt, var(counter), lit(rng_.uniform(0, 3)))
                     : bin(BinOp::Lt, var(counter), lit(rng_.uniform(0, 6)));
    Block body;
    used = 2;
    std::vector<std::string> others;
    for (const auto& v : bound_)
      if (v != counter) others.push_back(v);
    if (!others.empty() && available >= 3 && rng_.bernoulli(0.8)) {
      body.push_back(assign(others));
      ++used;
    }
    const BinOp step = down ? BinOp::Sub : BinOp::Add;
    body.push_back(Stmt{Assign{counter, bin(step, var(counter), lit(rng_.uniform(1, 3)))}});
    return Stmt{While{std::move(cond), std::move(body)}};
  }

  Expr atom() {
    if (rng_.bernoulli(0.7)) return var(bound_[rng_.index(bound_.size())]);
    return lit(rng_.uniform(0, 9));
  }

  Expr arith(int depth) {
    if (depth <= 1 || rng_.bernoulli(0.35)) return atom();
    if (rng_.bernoulli(0.1)) {
      const auto fn = static_cast<Builtin>(rng_.uniform(0, 2));
      std::vector<Expr> args;
      for (std::size_t i = 0; i < arity(fn); ++i) args.push_back(arith(depth - 1));
      return call(fn, std::move(args));
    }
    static constexpr std::array<BinOp, 5> ops = {BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div, BinOp::Mod};
    const BinOp op = ops[weighted(rng_, std::array<int, 5>{4, 3, 3, 1, 1})];
    Expr lhs = arith(depth - 1);
    Expr rhs = arith(depth - 1);
    return bin(op, std::move(lhs), std::move(rhs));
  }

  Expr comparison() {
    static constexpr std::array<BinOp, 6> ops = {BinOp::Lt, BinOp::Gt, BinOp::Le, BinOp::Ge, BinOp::Eq, BinOp::Ne};
    const BinOp op = ops[weighted(rng_, std::array<int, 6>{3, 3, 1, 1, 1, 1})];
    Expr lhs = arith(depth_ - 1);
    Expr rhs = arith(depth_ - 1);
    return bin(op, std::move(lhs), std::move(rhs));
  }

  Rng& rng_;
  int depth_;
  std::vector<std::string> bound_;
  std::vector<std::string> free_locals_;
};

}  // namespace

std::vector<Function> generate(std::uint64_t seed, std::size_t count, int depth, std::string_view stream) {
  Rng rng(seed, stream);
  std::vector<Function> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(Generator(rng, depth).function());
  return out;
}

}  // namespace sgbt::corpus
