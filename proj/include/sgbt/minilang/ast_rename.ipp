#pragma once

namespace sgbt::minilang {
namespace detail {

template <class F>
Expr rename_expr(const Expr& e, F& rename) {
  return std::visit(
      [&](const auto& n) -> Expr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          return Expr{Var{rename(n.name)}};
        } else if constexpr (std::is_same_v<T, Binary>) {
          return Expr{Binary{n.op, rename_expr(*n.lhs, rename), rename_expr(*n.rhs, rename)}};
        } else if constexpr (std::is_same_v<T, Call>) {
          Call c{n.fn, {}};
          for (const auto& a : n.args) c.args.push_back(rename_expr(a, rename));
          return Expr{std::move(c)};
        } else {
          return Expr{n};
        }
      },
      e.node);
}

template <class F>
Block rename_block(const Block& block, F& rename) {
  Block out;
  for (const auto& s : block) {
    out.push_back(std::visit(
        [&](const auto& n) -> Stmt {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Let>) {
            return Stmt{Let{rename(n.var), rename_expr(n.value, rename)}};
          } else if constexpr (std::is_same_v<T, Assign>) {
            return Stmt{Assign{rename(n.var), rename_expr(n.value, rename)}};
          } else if constexpr (std::is_same_v<T, If>) {
            If i{rename_expr(n.cond, rename), rename_block(n.then_body, rename), std::nullopt};
            if (n.else_body) i.else_body = rename_block(*n.else_body, rename);
            return Stmt{std::move(i)};
          } else if constexpr (std::is_same_v<T, While>) {
            return Stmt{While{rename_expr(n.cond, rename), rename_block(n.body, rename)}};
          } else {
            return Stmt{Return{rename_expr(n.value, rename)}};
          }
        },
        s.node));
  }
  return out;
}

}  // namespace detail

template <class F>
Function rename_variables(const Function& fn, F&& rename) {
  Function out{fn.name, {}, {}};
  for (const auto& p : fn.params) out.params.push_back(rename(p));
  out.body = detail::rename_block(fn.body, rename);
  return out;
}

}  // namespace sgbt::minilang
