#include "sgbt/corpus/jsonl.hpp"

#include <istream>
#include <json.hpp>
#include <limits>
#include <ostream>

#include "sgbt/error.hpp"
#include "sgbt/minilang/lexer.hpp"

namespace sgbt::corpus {
namespace {

using nlohmann::json;

template <class F>
void for_each_line(std::istream& in, F&& fn) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      fn(json::parse(line));
    } catch (const json::exception& e) {
      throw Error("DataError", "line " + std::to_string(lineno) + ": " + e.what());
    } catch (const Error& e) {
      throw Error("DataError", "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
}

json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw Error("DataError", "expected integer, got " + j.dump());
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

}  // namespace

void write_mono(std::ostream& out, const MonoCorpus& corpus) {
  for (const auto& it : corpus.items)
    emit(out, json{{"id", it.id}, {"lang", minilang::to_string(corpus.lang)}, {"text", minilang::render_text(it.seq)}});
}

MonoCorpus read_mono(std::istream& in, Lang fallback) {
  MonoCorpus out{fallback, {}};
  bool first = true;
  for_each_line(in, [&](const json& j) {
    const Lang lang = minilang::lang_from_string(j.at("lang").get<std::string>());
    if (first) out.lang = lang;
    else if (lang != out.lang) throw Error("DataError", "mixed languages in one corpus");
    first = false;
    out.items.push_back(MonoItem{j.at("id").get<std::string>(), minilang::lex(j.at("text").get<std::string>(), lang)});
  });
  return out;
}

void write_bimodal(std::ostream& out, const std::vector<BimodalPair>& pairs) {
  for (const auto& p : pairs)
    emit(out, json{{"id", p.id},
                   {"lang", minilang::to_string(p.code.lang)},
                   {"code", minilang::render_text(p.code)},
                   {"summary", minilang::render_text(p.summary)}});
}

std::vector<BimodalPair> read_bimodal(std::istream& in) {
  std::vector<BimodalPair> out;
  for_each_line(in, [&](const json& j) {
    const Lang lang = minilang::lang_from_string(j.at("lang").get<std::string>());
    if (!minilang::is_code(lang)) throw Error("DataError", "bimodal lang must be j or p");
    out.push_back(BimodalPair{j.at("id").get<std::string>(), minilang::lex(j.at("code").get<std::string>(), lang),
                              minilang::lex(j.at("summary").get<std::string>(), Lang::Pivot)});
  });
  return out;
}

void write_eval(std::ostream& out, const ParallelEvalSet& set) {
  for (const auto& p : set.pairs) {
    json tests = json::array();
    for (const auto& t : p.tests) {
      json row = json::array();
      for (const auto& a : t.args) row.push_back(int_to_json(a));
      row.push_back(int_to_json(t.expected));
      tests.push_back(std::move(row));
    }
    emit(out, json{{"id", p.id},
                   {"j", minilang::render_text(p.j)},
                   {"p", minilang::render_text(p.p)},
                   {"tests", std::move(tests)}});
  }
}

ParallelEvalSet read_eval(std::istream& in) {
  ParallelEvalSet out;
  for_each_line(in, [&](const json& j) {
    EvalPair p{j.at("id").get<std::string>(), minilang::lex(j.at("j").get<std::string>(), Lang::J),
               minilang::lex(j.at("p").get<std::string>(), Lang::P), {}};
    for (const auto& row : j.at("tests")) {
      if (!row.is_array() || row.empty()) throw Error("DataError", "test row must be [args..., expected]");
      TestCase t;
      for (std::size_t i = 0; i + 1 < row.size(); ++i) t.args.push_back(int_from_json(row[i]));
      t.expected = int_from_json(row.back());
      p.tests.push_back(std::move(t));
    }
    out.pairs.push_back(std::move(p));
  });
  return out;
}

void write_hyps(std::ostream& out, const std::vector<HypList>& items) {
  for (const auto& item : items) {
    json hyps = json::array();
    for (const auto& h : item.hyps) hyps.push_back(json{{"text", minilang::flat_text(h.seq)}, {"logprob", h.logprob}});
    emit(out, json{{"id", item.id}, {"hyps", std::move(hyps)}});
  }
}

std::vector<HypList> read_hyps(std::istream& in, Lang lang) {
  std::vector<HypList> out;
  for_each_line(in, [&](const json& j) {
    HypList item{j.at("id").get<std::string>(), {}};
    for (const auto& h : j.at("hyps")) {
      const auto text = h.at("text").get<std::string>();
      // Multi-line text is laid-out P source; anything else is the flat form.
      auto seq = text.find('\n') == std::string::npos ? minilang::from_flat(text, lang) : minilang::lex(text, lang);
      item.hyps.push_back(Hypothesis{std::move(seq), h.at("logprob").get<double>()});
    }
    out.push_back(std::move(item));
  });
  return out;
}

}  // namespace sgbt::corpus
