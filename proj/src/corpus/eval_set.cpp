#include "sgbt/corpus/corpus.hpp"
#include "sgbt/error.hpp"
#include "sgbt/minilang/printer.hpp"
#include "sgbt/rng.hpp"

namespace sgbt::corpus {

ParallelEvalSet make_eval_set(const std::vector<Function>& asts, std::uint64_t seed, std::size_t n_tests,
                              std::uint64_t step_limit, std::string_view id_prefix) {
  if (n_tests == 0) throw Error("InvalidArgument", "n_tests must be >= 1");
  Rng rng(seed, "tests");
  ParallelEvalSet out;
  for (std::size_t i = 0; i < asts.size(); ++i) {
    const Function& fn = asts[i];
    std::vector<TestCase> tests;
    bool ok = true;
    for (std::size_t t = 0; t < n_tests && ok; ++t) {
      ok = false;
      for (int attempt = 0; attempt <= kEvalRedraws; ++attempt) {
        std::vector<Int> args;
        for (std::size_t a = 0; a < fn.params.size(); ++a) args.emplace_back(rng.uniform(kTestArgMin, kTestArgMax));
        auto outcome = minilang::interpret(fn, args, step_limit);
        if (auto* v = std::get_if<minilang::Value>(&outcome)) {
          tests.push_back(TestCase{std::move(args), v->value});
          ok = true;
          break;
        }
      }
    }
    if (!ok) {
      ++out.discarded;
      continue;
    }
    out.pairs.push_back(EvalPair{std::string(id_prefix) + "-" + std::to_string(i), minilang::print(fn, Lang::J),
                                 minilang::print(fn, Lang::P), std::move(tests)});
  }
  return out;
}

}  // namespace sgbt::corpus
