#include "sgbt/minilang/ast.hpp"

namespace sgbt::minilang {

std::string_view symbol(BinOp op) noexcept {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Mod: return "%";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Gt: return ">";
    case BinOp::Ge: return ">=";
    case BinOp::Eq: return "==";
    case BinOp::Ne: return "!=";
  }
  return "?";
}

int precedence(BinOp op) noexcept {
  switch (op) {
    case BinOp::Eq:
    case BinOp::Ne: return 1;
    case BinOp::Lt:
    case BinOp::Le:
    case BinOp::Gt:
    case BinOp::Ge: return 2;
    case BinOp::Add:
    case BinOp::Sub: return 3;
    case BinOp::Mul:
    case BinOp::Div:
    case BinOp::Mod: return 4;
  }
  return 0;
}

std::string_view name(Builtin fn) noexcept {
  switch (fn) {
    case Builtin::Abs: return "abs";
    case Builtin::Min: return "min";
    case Builtin::Max: return "max";
  }
  return "?";
}

std::size_t arity(Builtin fn) noexcept { return fn == Builtin::Abs ? 1 : 2; }

bool Call::operator==(const Call& other) const { return fn == other.fn && args == other.args; }

bool If::operator==(const If& other) const {
  return cond == other.cond && then_body == other.then_body && else_body == other.else_body;
}

bool While::operator==(const While& other) const { return cond == other.cond && body == other.body; }

Expr lit(long long value) { return Expr{IntLit{Int(value)}}; }
Expr var(std::string name) { return Expr{Var{std::move(name)}}; }
Expr bin(BinOp op, Expr lhs, Expr rhs) { return Expr{Binary{op, std::move(lhs), std::move(rhs)}}; }
Expr call(Builtin fn, std::vector<Expr> args) { return Expr{Call{fn, std::move(args)}}; }

std::size_t count_statements(const Block& block) {
  std::size_t n = 0;
  for (const auto& s : block) {
    ++n;
    if (const auto* i = std::get_if<If>(&s.node)) {
      n += count_statements(i->then_body);
      if (i->else_body) n += count_statements(*i->else_body);
    } else if (const auto* w = std::get_if<While>(&s.node)) {
      n += count_statements(w->body);
    }
  }
  return n;
}

}  // namespace sgbt::minilang
