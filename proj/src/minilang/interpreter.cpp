#include "sgbt/minilang/interpreter.hpp"

#include <map>
#include <optional>

#include "sgbt/error.hpp"

namespace sgbt::minilang {
namespace {

struct OutOfFuel {};
struct Fault {
  RuntimeErrorKind kind;
};

class Machine {
 public:
  explicit Machine(std::uint64_t limit) : fuel_(limit) {}

  // Returns the value of an executed `return`, or nullopt on fall-through.
  std::optional<Int> block(const Block& body) {
    for (const auto& s : body) {
      if (auto r = statement(s)) return r;
    }
    return std::nullopt;
  }

  std::map<std::string, Int> env;

 private:
  void charge(std::uint64_t cost) {
    if (cost > fuel_) {
      fuel_ = 0;
      throw OutOfFuel{};
    }
    fuel_ -= cost;
  }

  std::optional<Int> statement(const Stmt& s) {
    charge(1);
    return std::visit(
        [&](const auto& n) -> std::optional<Int> {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Let> || std::is_same_v<T, Assign>) {
            env[n.var] = eval(n.value);
            return std::nullopt;
          } else if constexpr (std::is_same_v<T, If>) {
            if (eval(n.cond) != 0) return block(n.then_body);
            if (n.else_body) return block(*n.else_body);
            return std::nullopt;
          } else if constexpr (std::is_same_v<T, While>) {
            for (;;) {
              if (eval(n.cond) == 0) return std::nullopt;
              if (auto r = block(n.body)) return r;
              charge(1);
            }
          } else {
            return eval(n.value);
          }
        },
        s.node);
  }

  Int eval(const Expr& e) {
    return std::visit(
        [&](const auto& n) -> Int {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, IntLit>) {
            return n.value;
          } else if constexpr (std::is_same_v<T, Var>) {
            auto it = env.find(n.name);
            if (it == env.end()) throw Fault{RuntimeErrorKind::UndefinedVariable};
            return it->second;
          } else if constexpr (std::is_same_v<T, Binary>) {
            Int a = eval(*n.lhs);
            Int b = eval(*n.rhs);
            Int r = apply(n.op, a, b);
            charge(1 + (r.backend().size() > 1 ? r.backend().size() - 1 : 0));
            return r;
          } else {
            std::vector<Int> args;
            for (const auto& a : n.args) args.push_back(eval(a));
            charge(1);
            switch (n.fn) {
              case Builtin::Abs: return abs(args[0]);
              case Builtin::Min: return args[0] < args[1] ? args[0] : args[1];
              case Builtin::Max: return args[0] < args[1] ? args[1] : args[0];
            }
            return Int(0);
          }
        },
        e.node);
  }

  static Int apply(BinOp op, const Int& a, const Int& b) {
    switch (op) {
      case BinOp::Add: return a + b;
      case BinOp::Sub: return a - b;
      case BinOp::Mul: return a * b;
      case BinOp::Div:
        if (b == 0) throw Fault{RuntimeErrorKind::DivisionByZero};
        return a / b;
      case BinOp::Mod:
        if (b == 0) throw Fault{RuntimeErrorKind::DivisionByZero};
        return a % b;
      case BinOp::Lt: return Int(a < b ? 1 : 0);
      case BinOp::Le: return Int(a <= b ? 1 : 0);
      case BinOp::Gt: return Int(a > b ? 1 : 0);
      case BinOp::Ge: return Int(a >= b ? 1 : 0);
      case BinOp::Eq: return Int(a == b ? 1 : 0);
      case BinOp::Ne: return Int(a != b ? 1 : 0);
    }
    return Int(0);
  }

  std::uint64_t fuel_;
};

}  // namespace

std::string_view to_string(RuntimeErrorKind kind) noexcept {
  switch (kind) {
    case RuntimeErrorKind::DivisionByZero: return "DivisionByZero";
    case RuntimeErrorKind::UndefinedVariable: return "UndefinedVariable";
  }
  return "?";
}

ExecOutcome interpret(const Function& fn, const std::vector<Int>& args, std::uint64_t step_limit) {
  if (args.size() != fn.params.size())
    throw Error("ArityMismatch", "function '" + fn.name + "' takes " + std::to_string(fn.params.size()) +
                                     " argument(s), got " + std::to_string(args.size()));
  if (step_limit == 0) throw Error("InvalidArgument", "step_limit must be >= 1");
  Machine m(step_limit);
  for (std::size_t i = 0; i < args.size(); ++i) m.env[fn.params[i]] = args[i];
  try {
    if (auto r = m.block(fn.body)) return Value{*r};
    return Value{Int(0)};
  } catch (const OutOfFuel&) {
    return Timeout{};
  } catch (const Fault& f) {
    return RuntimeError{f.kind};
  }
}

}  // namespace sgbt::minilang
