#include "sgbt/seq2seq/checkpoint.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "sgbt/error.hpp"

namespace sgbt::seq2seq {
namespace {

// Format (tab separated):
//   sgbt-model <version>
//   param <name> <value>
//   vocab <lang> <text>
//   primary <key> <op> <weight>
//   insertion <key> <op> <weight>
//   total <table> <key> <weight>     (stored, not re-summed, to stay bit-exact)

std::string num(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_num(const std::string& s) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) throw Error("DataError", "bad number '" + s + "'");
  return v;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) return out;
    start = tab + 1;
  }
}

void write_table(std::ostream& out, const char* tag, const CountTable& table) {
  std::map<std::string, const OpCounts*> sorted;
  for (const auto& [k, v] : table) sorted.emplace(k, &v);
  for (const auto& [k, cell] : sorted) {
    for (const auto& [op, w] : cell->ops) out << tag << '\t' << k << '\t' << op << '\t' << num(w) << '\n';
    out << "total\t" << tag << '\t' << k << '\t' << num(cell->total) << '\n';
  }
}

}  // namespace

void save(std::ostream& out, const ModelParams& theta) {
  out << "sgbt-model\t" << kCheckpointVersion << '\n';
  out << "param\tbackoff\t" << num(theta.backoff) << '\n';
  out << "param\tcopy_alpha\t" << num(theta.copy_alpha) << '\n';
  out << "param\tmax_ins\t" << theta.max_ins << '\n';
  out << "param\tsmoothing\t" << num(theta.smoothing) << '\n';
  for (const auto& [lang, texts] : theta.vocab)
    for (const auto& t : texts) out << "vocab\t" << minilang::to_string(lang) << '\t' << t << '\n';
  write_table(out, "insertion", theta.insertion);
  write_table(out, "primary", theta.primary);
}

ModelParams load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error("DataError", "empty checkpoint");
  const auto head = split_tabs(line);
  if (head.size() != 2 || head[0] != "sgbt-model") throw Error("DataError", "not a model checkpoint");
  if (head[1] != std::to_string(kCheckpointVersion))
    throw Error("DataError", "unsupported checkpoint version " + head[1]);

  ModelParams theta;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split_tabs(line);
    auto need = [&](std::size_t n) {
      if (f.size() != n) throw Error("DataError", "checkpoint line " + std::to_string(lineno) + ": wrong field count");
    };
    if (f[0] == "param") {
      need(3);
      if (f[1] == "backoff") theta.backoff = parse_num(f[2]);
      else if (f[1] == "copy_alpha") theta.copy_alpha = parse_num(f[2]);
      else if (f[1] == "smoothing") theta.smoothing = parse_num(f[2]);
      else if (f[1] == "max_ins") theta.max_ins = static_cast<std::size_t>(std::stoull(f[2]));
      else throw Error("DataError", "unknown param '" + f[1] + "'");
    } else if (f[0] == "vocab") {
      need(3);
      theta.vocab[minilang::lang_from_string(f[1])].insert(f[2]);
    } else if (f[0] == "primary" || f[0] == "insertion") {
      need(4);
      auto& cell = (f[0] == "primary" ? theta.primary : theta.insertion)[f[1]];
      const double w = parse_num(f[3]);
      cell.ops[f[2]] = w;
    } else if (f[0] == "total") {
      need(4);
      if (f[1] != "primary" && f[1] != "insertion") throw Error("DataError", "unknown table '" + f[1] + "'");
      (f[1] == "primary" ? theta.primary : theta.insertion)[f[2]].total = parse_num(f[3]);
    } else {
      throw Error("DataError", "checkpoint line " + std::to_string(lineno) + ": unknown record '" + f[0] + "'");
    }
  }
  if (!(theta.copy_alpha > 0.0) || !(theta.smoothing > 0.0))
    throw Error("DataError", "checkpoint has non-positive copy_alpha or smoothing");
  return theta;
}

void save_file(const std::string& path, const ModelParams& theta) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("IoError", "cannot write " + path);
  save(out, theta);
}

ModelParams load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot read " + path);
  return load(in);
}

}  // namespace sgbt::seq2seq
