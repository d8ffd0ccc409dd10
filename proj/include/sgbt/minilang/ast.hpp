#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sgbt::minilang {

using Int = boost::multiprecision::cpp_int;

/// Owning pointer with value semantics (deep copy, deep equality).
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}  // NOLINT(google-explicit-constructor)
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;
  ~Box() = default;

  const T& operator*() const { return *ptr_; }
  T& operator*() { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  T* operator->() { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a.ptr_ == *b.ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

enum class BinOp { Add, Sub, Mul, Div, Mod, Lt, Le, Gt, Ge, Eq, Ne };
enum class Builtin { Abs, Min, Max };

std::string_view symbol(BinOp op) noexcept;
/// Binding strength: 1 equality, 2 relational, 3 additive, 4 multiplicative.
int precedence(BinOp op) noexcept;
std::string_view name(Builtin fn) noexcept;
std::size_t arity(Builtin fn) noexcept;

struct Expr;

struct IntLit {
  Int value;
  bool operator==(const IntLit&) const = default;
};

struct Var {
  std::string name;
  bool operator==(const Var&) const = default;
};

struct Binary {
  BinOp op;
  Box<Expr> lhs;
  Box<Expr> rhs;
  bool operator==(const Binary&) const = default;
};

struct Call {
  Builtin fn;
  std::vector<Expr> args;
  bool operator==(const Call&) const;
};

struct Expr {
  std::variant<IntLit, Var, Binary, Call> node;
  bool operator==(const Expr&) const = default;
};

struct Stmt;
using Block = std::vector<Stmt>;

struct Let {
  std::string var;
  Expr value;
  bool operator==(const Let&) const = default;
};

struct Assign {
  std::string var;
  Expr value;
  bool operator==(const Assign&) const = default;
};

struct If {
  Expr cond;
  Block then_body;
  std::optional<Block> else_body;
  bool operator==(const If&) const;
};

struct While {
  Expr cond;
  Block body;
  bool operator==(const While&) const;
};

struct Return {
  Expr value;
  bool operator==(const Return&) const = default;
};

struct Stmt {
  std::variant<Let, Assign, If, While, Return> node;
  bool operator==(const Stmt&) const = default;
};

/// One standalone function: the unit every surface language parses into.
struct Function {
  std::string name;
  std::vector<std::string> params;
  Block body;
  bool operator==(const Function&) const = default;
};

// Construction helpers, mostly for tests and the generator.
Expr lit(long long value);
Expr var(std::string name);
Expr bin(BinOp op, Expr lhs, Expr rhs);
Expr call(Builtin fn, std::vector<Expr> args);

/// Applies `rename` to every identifier occurrence (params, targets, uses).
/// The function name is kept.
template <class F>
Function rename_variables(const Function& fn, F&& rename);

std::size_t count_statements(const Block& block);

}  // namespace sgbt::minilang

#include "sgbt/minilang/ast_rename.ipp"
