#pragma once

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "sgbt/minilang/ast.hpp"

namespace sgbt::minilang {

inline constexpr std::uint64_t kDefaultStepLimit = 10000;

struct Value {
  Int value;
  bool operator==(const Value&) const = default;
};

enum class RuntimeErrorKind { DivisionByZero, UndefinedVariable };
std::string_view to_string(RuntimeErrorKind kind) noexcept;

struct RuntimeError {
  RuntimeErrorKind kind;
  bool operator==(const RuntimeError&) const = default;
};

struct Timeout {
  bool operator==(const Timeout&) const = default;
};

using ExecOutcome = std::variant<Value, RuntimeError, Timeout>;

/// Runs `fn` on `args` with a fuel budget of `step_limit`.
///
/// Fuel: every executed statement and every loop-condition check costs 1;
/// every arithmetic operation costs 1 plus one unit per 64-bit limb of its
/// result beyond the first, so runaway integer growth exhausts the budget
/// instead of memory. Integers are arbitrary precision; `/` and `%`
/// truncate toward zero; comparisons yield 1 or 0; falling off the end
/// returns 0. Throws sgbt::Error("ArityMismatch") on wrong argument count.
ExecOutcome interpret(const Function& fn, const std::vector<Int>& args,
                      std::uint64_t step_limit = kDefaultStepLimit);

}  // namespace sgbt::minilang
