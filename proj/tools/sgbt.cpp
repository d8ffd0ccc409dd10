// sgbt: command line entry point. Every subcommand reads its inputs from
// explicit paths and writes under --out-dir, plus a resolved config file.

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "sgbt/bt/back_translation.hpp"
#include "sgbt/bt/setup.hpp"
#include "sgbt/corpus/jsonl.hpp"
#include "sgbt/embed/embed.hpp"
#include "sgbt/error.hpp"
#include "sgbt/metrics/report.hpp"
#include "sgbt/minilang/parser.hpp"
#include "sgbt/seq2seq/checkpoint.hpp"
#include "sgbt/seq2seq/decode.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sgbt;

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot read " + path);
  return in;
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("IoError", "cannot write " + path.string());
  return out;
}

std::string slurp(const std::string& path) {
  auto in = open_in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

corpus::MonoCorpus read_mono_file(const std::string& path) {
  auto in = open_in(path);
  return corpus::read_mono(in);
}

std::vector<corpus::BimodalPair> read_bimodal_file(const std::string& path) {
  auto in = open_in(path);
  return corpus::read_bimodal(in);
}

corpus::ParallelEvalSet read_eval_file(const std::string& path) {
  auto in = open_in(path);
  return corpus::read_eval(in);
}

void write_json(const fs::path& path, const json& j) {
  auto out = open_out(path);
  out << metrics::canonical_dump(j) << '\n';
}

// "m:b" pairs for the CA grid.
std::vector<metrics::CaConfig> parse_ca(const std::vector<std::string>& specs) {
  std::vector<metrics::CaConfig> out;
  for (const auto& s : specs) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw CLI::ValidationError("--ca", "expected m:b, got '" + s + "'");
    try {
      out.push_back({std::stoul(s.substr(0, colon)), std::stoul(s.substr(colon + 1))});
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("--ca", "expected m:b, got '" + s + "'");
    }
  }
  return out;
}

json step_json(const bt::StepRecord& r) {
  json j{{"step", r.step}, {"provenance", r.provenance}, {"pairs_f", r.pairs_f}, {"pairs_b", r.pairs_b}};
  if (r.dev_bleu) j["dev_bleu"] = *r.dev_bleu;
  return j;
}

struct Cli {
  CLI::App app{"sgbt: summarize-generate back-translation toolkit", "sgbt"};
  std::string out_dir;
  CLI::App* active = nullptr;

  // Stores the resolved flags of the running subcommand next to its outputs.
  void save_config() const {
    if (!active) return;
    std::ostringstream ss;
    ss << "# resolved flags for `sgbt " << active->get_name() << "`\n";
    ss << "[" << active->get_name() << "]\n" << active->config_to_str(true, false);
    auto out = open_out(fs::path(out_dir) / (active->get_name() + ".config.toml"));
    out << ss.str();
  }
};

void add_seed(CLI::App* sub, std::uint64_t& seed) {
  sub->add_option("--seed", seed, "run seed")->envname("SGBT_SEED")->capture_default_str();
}

void add_out_dir(CLI::App* sub, Cli& cli) {
  sub->add_option("--out-dir", cli.out_dir, "output directory")->required();
}

}  // namespace

int main(int argc, char** argv) {
  Cli cli;
  CLI::App& app = cli.app;
  app.set_config("--config", "", "TOML config; flags override file values");
  app.require_subcommand(1);

  // gen-corpus
  bt::SetupConfig gen;
  gen.seed = 0;
  auto* gen_cmd = app.add_subcommand("gen-corpus", "synthetic mono, bimodal and eval sets");
  add_seed(gen_cmd, gen.seed);
  gen_cmd->add_option("--count", gen.mono, "functions per language in each mono pool")->capture_default_str();
  gen_cmd->add_option("--bimodal-count", gen.bimodal, "bimodal pairs per language")->capture_default_str();
  gen_cmd->add_option("--dev-count", gen.dev, "dev pairs")->capture_default_str();
  gen_cmd->add_option("--test-count", gen.test, "test pairs")->capture_default_str();
  gen_cmd->add_option("--depth", gen.depth, "max expression depth")->capture_default_str()->check(CLI::Range(1, 8));
  add_out_dir(gen_cmd, cli);

  // dedup
  std::string dedup_in;
  std::size_t dedup_max_len = 0;
  auto* dedup_cmd = app.add_subcommand("dedup", "drop exact duplicates from a mono corpus");
  dedup_cmd->add_option("--input", dedup_in, "mono JSONL")->required();
  dedup_cmd->add_option("--max-len", dedup_max_len, "also drop items longer than this (0 = keep all)")
      ->capture_default_str();
  add_out_dir(dedup_cmd, cli);

  // extract
  std::string extract_in, extract_lang;
  std::size_t extract_max_len = corpus::kDefaultMaxLen;
  auto* extract_cmd = app.add_subcommand("extract", "split a source file into one item per function");
  extract_cmd->add_option("--input", extract_in, "source file")->required();
  extract_cmd->add_option("--lang", extract_lang, "j or p")->required()->check(CLI::IsMember({"j", "p"}));
  extract_cmd->add_option("--max-len", extract_max_len, "length filter")->capture_default_str();
  add_out_dir(extract_cmd, cli);

  // make-eval
  std::string eval_in;
  std::uint64_t eval_seed = 0;
  std::size_t eval_tests = corpus::kDefaultTests;
  std::uint64_t eval_step_limit = minilang::kDefaultStepLimit;
  auto* eval_cmd = app.add_subcommand("make-eval", "parallel eval set with unit tests from a mono corpus");
  eval_cmd->add_option("--input", eval_in, "mono JSONL (j or p)")->required();
  add_seed(eval_cmd, eval_seed);
  eval_cmd->add_option("--tests", eval_tests, "tests per program")->capture_default_str();
  eval_cmd->add_option("--step-limit", eval_step_limit, "interpreter fuel")->capture_default_str();
  add_out_dir(eval_cmd, cli);

  // train-sg
  std::string sg_bi_j, sg_bi_p;
  double sg_alpha = seq2seq::kDefaultCopyAlpha, sg_smoothing = seq2seq::kDefaultSmoothing;
  auto* sg_cmd = app.add_subcommand("train-sg", "supervised summarizer S and generator G");
  sg_cmd->add_option("--bimodal-j", sg_bi_j, "bimodal JSONL for j")->required();
  sg_cmd->add_option("--bimodal-p", sg_bi_p, "bimodal JSONL for p")->required();
  sg_cmd->add_option("--copy-alpha", sg_alpha)->capture_default_str();
  sg_cmd->add_option("--smoothing", sg_smoothing)->capture_default_str();
  add_out_dir(sg_cmd, cli);

  // train-bt
  bt::BTConfig btc;
  std::string bt_warm = "online", bt_src, bt_tgt, bt_bi_j, bt_bi_p, bt_dev, bt_test;
  auto* bt_cmd = app.add_subcommand("train-bt", "back-translation with an S&G warm start");
  bt_cmd->add_option("--m", btc.m, "steps that use S&G pseudo-sources")->capture_default_str();
  bt_cmd->add_option("--steps", btc.steps, "total BT steps")->capture_default_str();
  bt_cmd->add_option("--batch", btc.batch_size, "samples per step")->capture_default_str();
  bt_cmd->add_option("--dropout", btc.dropout, "S&G pivot token dropout")->capture_default_str();
  add_seed(bt_cmd, btc.seed);
  bt_cmd->add_option("--eval-interval", btc.eval_interval, "dev BLEU every N steps")->capture_default_str();
  bt_cmd->add_option("--warm-start", bt_warm)->capture_default_str()->check(CLI::IsMember({"online", "offline"}));
  bt_cmd->add_option("--copy-alpha", btc.copy_alpha)->capture_default_str();
  bt_cmd->add_option("--smoothing", btc.smoothing)->capture_default_str();
  bt_cmd->add_option("--src-corpus", bt_src, "mono JSONL, j")->required();
  bt_cmd->add_option("--tgt-corpus", bt_tgt, "mono JSONL, p")->required();
  bt_cmd->add_option("--bimodal-j", bt_bi_j)->required();
  bt_cmd->add_option("--bimodal-p", bt_bi_p)->required();
  bt_cmd->add_option("--dev", bt_dev, "dev eval JSONL")->required();
  bt_cmd->add_option("--test", bt_test, "optional test eval JSONL, scored with the best checkpoint");
  add_out_dir(bt_cmd, cli);

  // translate
  std::string tr_model, tr_input, tr_eval, tr_target, tr_direction, tr_output = "hyps.jsonl";
  std::size_t tr_beam = 1, tr_nbest = 0;
  auto* tr_cmd = app.add_subcommand("translate", "n-best translations from a checkpoint");
  tr_cmd->add_option("--model", tr_model, "checkpoint file")->required();
  auto* tr_in_opt = tr_cmd->add_option("--input", tr_input, "mono JSONL to translate");
  auto* tr_eval_opt = tr_cmd->add_option("--eval", tr_eval, "eval JSONL; translates the source side");
  tr_in_opt->excludes(tr_eval_opt);
  tr_cmd->add_option("--target", tr_target, "target language with --input")->check(CLI::IsMember({"j", "p", "pivot"}));
  tr_cmd->add_option("--direction", tr_direction, "j2p or p2j with --eval")->check(CLI::IsMember({"j2p", "p2j"}));
  tr_cmd->add_option("--beam", tr_beam)->capture_default_str()->check(CLI::PositiveNumber);
  tr_cmd->add_option("--n-best", tr_nbest, "hypotheses kept (default: beam)");
  tr_cmd->add_option("--output", tr_output, "file name under --out-dir")->capture_default_str();
  add_out_dir(tr_cmd, cli);

  // evaluate
  std::string ev_hyps, ev_eval, ev_direction, ev_output = "report.json";
  std::vector<std::string> ev_ca;
  std::uint64_t ev_step_limit = minilang::kDefaultStepLimit;
  auto* ev_cmd = app.add_subcommand("evaluate", "BLEU, EM, CodeBLEU and computational accuracy");
  ev_cmd->add_option("--hyps", ev_hyps, "hypothesis JSONL")->required();
  ev_cmd->add_option("--eval", ev_eval, "eval JSONL")->required();
  ev_cmd->add_option("--direction", ev_direction)->required()->check(CLI::IsMember({"j2p", "p2j"}));
  ev_cmd->add_option("--ca", ev_ca, "CA grid as m:b (default 1:1 1:10 5:5 10:10, limited to the list length)");
  ev_cmd->add_option("--step-limit", ev_step_limit)->capture_default_str();
  ev_cmd->add_option("--output", ev_output, "file name under --out-dir")->capture_default_str();
  add_out_dir(ev_cmd, cli);

  // retrieval-eval
  std::string rt_eval, rt_model;
  auto* rt_cmd = app.add_subcommand("retrieval-eval", "j->p nearest-neighbour error, untrained vs S-mapped");
  rt_cmd->add_option("--eval", rt_eval, "eval JSONL supplying the parallel pairs")->required();
  rt_cmd->add_option("--model", rt_model, "S checkpoint")->required();
  add_out_dir(rt_cmd, cli);

  // export-embeddings
  std::vector<std::string> ex_inputs;
  std::string ex_model;
  auto* ex_cmd = app.add_subcommand("export-embeddings", "CSV of function embeddings");
  ex_cmd->add_option("--input", ex_inputs, "mono JSONL (repeatable)")->required();
  ex_cmd->add_option("--model", ex_model, "S checkpoint (omit for raw tokens)");
  add_out_dir(ex_cmd, cli);

  // report
  std::string rp_run;
  auto* rp_cmd = app.add_subcommand("report", "summary of a train-bt run directory");
  rp_cmd->add_option("--run-dir", rp_run)->required();
  add_out_dir(rp_cmd, cli);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
  for (auto* sub : app.get_subcommands()) cli.active = sub;

  try {
    const fs::path out(cli.out_dir);
    fs::create_directories(out);
    cli.save_config();

    if (*gen_cmd) {
      const auto s = bt::standard_setup(gen);
      auto w = [&](const char* name, auto&& fn) {
        auto f = open_out(out / name);
        fn(f);
      };
      w("mono-j.jsonl", [&](std::ostream& o) { corpus::write_mono(o, s.corpora.src); });
      w("mono-p.jsonl", [&](std::ostream& o) { corpus::write_mono(o, s.corpora.tgt); });
      w("bimodal-j.jsonl", [&](std::ostream& o) { corpus::write_bimodal(o, s.corpora.bimodal_j); });
      w("bimodal-p.jsonl", [&](std::ostream& o) { corpus::write_bimodal(o, s.corpora.bimodal_p); });
      w("dev.jsonl", [&](std::ostream& o) { corpus::write_eval(o, s.dev); });
      w("test.jsonl", [&](std::ostream& o) { corpus::write_eval(o, s.test); });
      const auto sj = corpus::corpus_stats(s.corpora.src), sp = corpus::corpus_stats(s.corpora.tgt);
      const auto bj = corpus::corpus_stats(s.corpora.bimodal_j), bp = corpus::corpus_stats(s.corpora.bimodal_p);
      json stats{{"seed", gen.seed},
                 {"mono_j", {{"functions", sj.n_functions}, {"tokens", sj.n_tokens}}},
                 {"mono_p", {{"functions", sp.n_functions}, {"tokens", sp.n_tokens}}},
                 {"bimodal_j", {{"functions", bj.n_functions}, {"tokens", bj.n_tokens}}},
                 {"bimodal_p", {{"functions", bp.n_functions}, {"tokens", bp.n_tokens}}},
                 {"dev", s.dev.pairs.size()},
                 {"test", s.test.pairs.size()}};
      write_json(out / "stats.json", stats);
    } else if (*dedup_cmd) {
      const auto in = read_mono_file(dedup_in);
      auto kept = corpus::dedup(in);
      const std::size_t after_dedup = kept.items.size();
      if (dedup_max_len) kept = corpus::length_filter(kept, dedup_max_len);
      auto f = open_out(out / "dedup.jsonl");
      corpus::write_mono(f, kept);
      std::cout << json{{"input", in.items.size()}, {"after_dedup", after_dedup}, {"kept", kept.items.size()}}.dump()
                << '\n';
    } else if (*extract_cmd) {
      const auto lang = minilang::lang_from_string(extract_lang);
      const auto fns = corpus::length_filter(corpus::extract_functions(slurp(extract_in), lang), extract_max_len);
      corpus::MonoCorpus mono{lang, {}};
      const std::string stem = fs::path(extract_in).stem().string();
      for (std::size_t i = 0; i < fns.size(); ++i) mono.items.push_back({stem + "-" + std::to_string(i), fns[i]});
      auto f = open_out(out / "extracted.jsonl");
      corpus::write_mono(f, mono);
      std::cout << json{{"functions", mono.items.size()}}.dump() << '\n';
    } else if (*eval_cmd) {
      const auto in = read_mono_file(eval_in);
      std::vector<minilang::Function> asts;
      for (const auto& it : in.items) asts.push_back(minilang::parse(it.seq));
      const auto set = corpus::make_eval_set(asts, eval_seed, eval_tests, eval_step_limit);
      auto f = open_out(out / "eval.jsonl");
      corpus::write_eval(f, set);
      std::cout << json{{"kept", set.pairs.size()}, {"discarded", set.discarded}}.dump() << '\n';
    } else if (*sg_cmd) {
      const auto sg = bt::train_sg(read_bimodal_file(sg_bi_j), read_bimodal_file(sg_bi_p), sg_alpha, sg_smoothing);
      seq2seq::save_file((out / "S.ckpt").string(), sg.S);
      seq2seq::save_file((out / "G.ckpt").string(), sg.G);
    } else if (*bt_cmd) {
      btc.warm_start = bt::warm_start_from_string(bt_warm);
      try {
        btc.validate();
      } catch (const Error& e) {
        throw CLI::ValidationError("train-bt", e.what());
      }
      bt::Corpora corpora{read_mono_file(bt_src), read_mono_file(bt_tgt), read_bimodal_file(bt_bi_j),
                          read_bimodal_file(bt_bi_p)};
      if (corpora.src.lang != minilang::Lang::J || corpora.tgt.lang != minilang::Lang::P)
        throw Error("DataError", "--src-corpus must be j and --tgt-corpus must be p");
      const auto dev = read_eval_file(bt_dev);
      const auto sg = bt::train_sg(corpora.bimodal_j, corpora.bimodal_p, btc.copy_alpha, btc.smoothing);
      seq2seq::save_file((out / "S.ckpt").string(), sg.S);
      seq2seq::save_file((out / "G.ckpt").string(), sg.G);

      auto log = open_out(out / "steps.jsonl");
      const auto st = bt::run(btc, corpora, dev, sg, [&](const bt::StepRecord& r) {
        log << metrics::canonical_dump(step_json(r), -1) << '\n';
      });
      log.close();
      seq2seq::save_file((out / "f.ckpt").string(), st.f);
      seq2seq::save_file((out / "b.ckpt").string(), st.b);
      seq2seq::save_file((out / "best-f.ckpt").string(), st.best.f);
      seq2seq::save_file((out / "best-b.ckpt").string(), st.best.b);
      json best{{"step", st.best.step}, {"dev_bleu", st.best.dev_bleu}, {"seed", btc.seed}};
      write_json(out / "best.json", best);

      if (!bt_test.empty()) {
        const auto test = read_eval_file(bt_test);
        json metrics_json = json::object();
        for (const char* d : {"j2p", "p2j"}) {
          metrics::EvalConfig ec{metrics::direction_from_string(d)};
          const auto& theta = ec.dir.source == minilang::Lang::J ? st.best.f : st.best.b;
          metrics_json[d] = metrics::to_json(metrics::evaluate_all(theta, test, ec));
        }
        write_json(out / "metrics.json", metrics_json);
      }
    } else if (*tr_cmd) {
      if (tr_input.empty() == tr_eval.empty()) throw CLI::ValidationError("translate", "give --input or --eval");
      const auto theta = seq2seq::load_file(tr_model);
      std::vector<std::pair<std::string, minilang::TokenSeq>> sources;
      minilang::Lang target;
      if (!tr_input.empty()) {
        if (tr_target.empty()) throw CLI::ValidationError("--target", "required with --input");
        target = minilang::lang_from_string(tr_target);
        for (auto& it : read_mono_file(tr_input).items) sources.emplace_back(it.id, it.seq);
      } else {
        if (tr_direction.empty()) throw CLI::ValidationError("--direction", "required with --eval");
        const auto dir = metrics::direction_from_string(tr_direction);
        target = dir.target;
        for (const auto& p : read_eval_file(tr_eval).pairs) sources.emplace_back(p.id, dir.source_of(p));
      }
      const seq2seq::BeamConfig bc{tr_beam, tr_nbest ? tr_nbest : tr_beam};
      std::vector<corpus::HypList> hyps;
      for (const auto& [id, src] : sources) {
        corpus::HypList item{id, {}};
        for (auto& s : seq2seq::generate(theta, src, target, bc)) item.hyps.push_back({std::move(s.seq), s.logprob});
        hyps.push_back(std::move(item));
      }
      auto f = open_out(out / tr_output);
      corpus::write_hyps(f, hyps);
    } else if (*ev_cmd) {
      metrics::EvalConfig ec{metrics::direction_from_string(ev_direction)};
      ec.step_limit = ev_step_limit;
      const auto eval = read_eval_file(ev_eval);
      std::ifstream hin = open_in(ev_hyps);
      const auto lists = corpus::read_hyps(hin, ec.dir.target);
      if (lists.size() != eval.pairs.size())
        throw Error("DataError", "hypothesis file has " + std::to_string(lists.size()) + " items, eval set has " +
                                     std::to_string(eval.pairs.size()));
      std::vector<std::vector<minilang::TokenSeq>> hyps;
      std::size_t shortest = SIZE_MAX;
      for (std::size_t i = 0; i < lists.size(); ++i) {
        if (lists[i].id != eval.pairs[i].id)
          throw Error("DataError", "item " + std::to_string(i) + ": id '" + lists[i].id + "' does not match '" +
                                       eval.pairs[i].id + "'");
        if (lists[i].hyps.empty()) throw Error("DataError", "item '" + lists[i].id + "' has no hypotheses");
        std::vector<minilang::TokenSeq> list;
        for (const auto& h : lists[i].hyps) list.push_back(h.seq);
        shortest = std::min(shortest, list.size());
        hyps.push_back(std::move(list));
      }
      if (!ev_ca.empty()) {
        ec.ca = parse_ca(ev_ca);
      } else {
        std::erase_if(ec.ca, [&](const metrics::CaConfig& c) { return c.beam > shortest; });
      }
      const auto report = metrics::evaluate_hyps(hyps, eval, ec);
      const std::string text = metrics::canonical_dump(metrics::to_json(report));
      auto f = open_out(out / ev_output);
      f << text << '\n';
      std::cout << text << '\n';
    } else if (*rt_cmd) {
      const auto eval = read_eval_file(rt_eval);
      const auto S = seq2seq::load_file(rt_model);
      std::vector<minilang::TokenSeq> js, ps;
      for (const auto& p : eval.pairs) {
        js.push_back(p.j);
        ps.push_back(p.p);
      }
      const double untrained = embed::parallel_retrieval_error(js, ps, nullptr);
      const double trained = embed::parallel_retrieval_error(js, ps, &S);
      json r{{"n_pairs", js.size()}, {"untrained", untrained}, {"trained", trained}};
      write_json(out / "retrieval.json", r);
      std::cout << "pairs\tuntrained\ttrained\n" << js.size() << '\t' << untrained << '\t' << trained << '\n';
    } else if (*ex_cmd) {
      std::vector<embed::Item> items;
      for (const auto& path : ex_inputs)
        for (auto& it : read_mono_file(path).items) items.push_back({it.id, std::move(it.seq)});
      std::optional<seq2seq::ModelParams> theta;
      if (!ex_model.empty()) theta = seq2seq::load_file(ex_model);
      auto f = open_out(out / "embeddings.csv");
      embed::export_embeddings(f, items, theta ? &*theta : nullptr);
    } else if (*rp_cmd) {
      const fs::path run(rp_run);
      std::ifstream log = open_in((run / "steps.jsonl").string());
      std::string line;
      std::size_t n_steps = 0, sg_steps = 0, model_steps = 0, pairs_f = 0, pairs_b = 0, lineno = 0;
      bool offline = false;
      json evals = json::array();
      std::optional<std::pair<std::size_t, double>> best;
      while (std::getline(log, line)) {
        ++lineno;
        if (line.empty()) continue;
        json r;
        try {
          r = json::parse(line);
          const std::string prov = r.at("provenance").get<std::string>();
          if (prov == "sg") ++sg_steps;
          if (prov == "model") ++model_steps;
          if (prov == "offline_sg") offline = true;
          if (prov == "sg" || prov == "model") ++n_steps;
          pairs_f += r.at("pairs_f").get<std::size_t>();
          pairs_b += r.at("pairs_b").get<std::size_t>();
          if (r.contains("dev_bleu")) {
            const auto step = r.at("step").get<std::size_t>();
            const double v = r.at("dev_bleu").get<double>();
            evals.push_back(json{{"step", step}, {"dev_bleu", v}, {"provenance", prov}});
            if (!best || v > best->second) best = {step, v};
          }
        } catch (const json::exception& e) {
          throw Error("DataError", "steps.jsonl line " + std::to_string(lineno) + ": " + e.what());
        }
      }
      if (!best) throw Error("DataError", "step log has no evaluations");
      json summary{{"steps", n_steps},
                   {"sg_steps", sg_steps},
                   {"model_steps", model_steps},
                   {"offline_warm_start", offline},
                   {"pairs_f_total", pairs_f},
                   {"pairs_b_total", pairs_b},
                   {"evaluations", evals},
                   {"final_dev_bleu", evals.back().at("dev_bleu")},
                   {"best", {{"step", best->first}, {"dev_bleu", best->second}}}};
      if (fs::exists(run / "best.json")) {
        const json recorded = json::parse(slurp((run / "best.json").string()));
        // The log is printed at 6 decimals, so compare at that precision.
        const bool agrees = recorded.at("step").get<std::size_t>() == best->first &&
                            std::abs(recorded.at("dev_bleu").get<double>() - best->second) < 5e-7;
        if (!agrees) throw Error("DataError", "best.json disagrees with the step log");
        summary["seed"] = recorded.at("seed");
      }
      if (fs::exists(run / "metrics.json")) summary["metrics"] = json::parse(slurp((run / "metrics.json").string()));
      write_json(out / "summary.json", summary);
      std::cout << metrics::canonical_dump(summary) << '\n';
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << json{{"error", e.kind()}, {"message", e.what()}}.dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InternalError"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}
