#pragma once

#include <set>
#include <string>

#include "sgbt/minilang/ast.hpp"

namespace sgbt::minilang {

/// A (reaching definition, use) pair. Variables are anonymized to var_0,
/// var_1, ... in order of first definition (params first). Sites are
/// structural: "p<i>" for parameter i, "s<n>" for the n-th statement in
/// preorder, so edges from two programs are directly comparable.
struct DataflowEdge {
  std::string var;
  std::string def_site;
  std::string use_site;

  auto operator<=>(const DataflowEdge&) const = default;
};

/// Reaching-definitions edges over structured control flow: both If branches
/// join, While iterates its body to a fixpoint, code after `return` is
/// unreachable.
std::set<DataflowEdge> dataflow_edges(const Function& fn);

}  // namespace sgbt::minilang
