#include "sgbt/minilang/dataflow.hpp"

#include <map>
#include <vector>

namespace sgbt::minilang {
namespace {

struct State {
  bool reachable = true;
  std::map<std::string, std::set<std::string>> defs;

  static State unreachable() { return State{false, {}}; }
};

State join(const State& a, const State& b) {
  if (!a.reachable) return b;
  if (!b.reachable) return a;
  State out = a;
  for (const auto& [v, sites] : b.defs) out.defs[v].insert(sites.begin(), sites.end());
  return out;
}

void collect_uses(const Expr& e, std::vector<std::string>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          out.push_back(n.name);
        } else if constexpr (std::is_same_v<T, Binary>) {
          collect_uses(*n.lhs, out);
          collect_uses(*n.rhs, out);
        } else if constexpr (std::is_same_v<T, Call>) {
          for (const auto& a : n.args) collect_uses(a, out);
        }
      },
      e.node);
}

class Analysis {
 public:
  explicit Analysis(const Function& fn) {
    for (const auto& p : fn.params) name_of(p);
    number(fn.body);
  }

  std::set<DataflowEdge> run(const Function& fn) {
    State entry;
    for (std::size_t i = 0; i < fn.params.size(); ++i) entry.defs[fn.params[i]] = {"p" + std::to_string(i)};
    block(fn.body, entry);
    return std::move(edges_);
  }

 private:
  // Preorder numbering and first-definition anonymization in one pass.
  void number(const Block& body) {
    for (const auto& s : body) {
      index_[&s] = index_.size();
      std::visit(
          [&](const auto& n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Let> || std::is_same_v<T, Assign>) {
              name_of(n.var);
            } else if constexpr (std::is_same_v<T, If>) {
              number(n.then_body);
              if (n.else_body) number(*n.else_body);
            } else if constexpr (std::is_same_v<T, While>) {
              number(n.body);
            }
          },
          s.node);
    }
  }

  const std::string& name_of(const std::string& v) {
    auto it = anon_.find(v);
    if (it == anon_.end()) it = anon_.emplace(v, "var_" + std::to_string(anon_.size())).first;
    return it->second;
  }

  void uses(const Expr& e, const State& st, const std::string& site) {
    if (!st.reachable) return;
    std::vector<std::string> names;
    collect_uses(e, names);
    for (const auto& v : names) {
      auto it = st.defs.find(v);
      if (it == st.defs.end()) continue;
      for (const auto& d : it->second) edges_.insert(DataflowEdge{name_of(v), d, site});
    }
  }

  State block(const Block& body, State st) {
    for (const auto& s : body) st = statement(s, std::move(st));
    return st;
  }

  State statement(const Stmt& s, State st) {
    const std::string site = "s" + std::to_string(index_.at(&s));
    return std::visit(
        [&](const auto& n) -> State {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Let> || std::is_same_v<T, Assign>) {
            uses(n.value, st, site);
            if (st.reachable) st.defs[n.var] = {site};
            return st;
          } else if constexpr (std::is_same_v<T, If>) {
            uses(n.cond, st, site);
            State then_out = block(n.then_body, st);
            State else_out = n.else_body ? block(*n.else_body, st) : st;
            return join(then_out, else_out);
          } else if constexpr (std::is_same_v<T, While>) {
            State head = st;
            for (;;) {
              uses(n.cond, head, site);
              State next = join(st, block(n.body, head));
              if (next.reachable == head.reachable && next.defs == head.defs) break;
              head = std::move(next);
            }
            return head;
          } else {
            uses(n.value, st, site);
            return State::unreachable();
          }
        },
        s.node);
  }

  std::map<const Stmt*, std::size_t> index_;
  std::map<std::string, std::string> anon_;
  std::set<DataflowEdge> edges_;
};

}  // namespace

std::set<DataflowEdge> dataflow_edges(const Function& fn) { return Analysis(fn).run(fn); }

}  // namespace sgbt::minilang
