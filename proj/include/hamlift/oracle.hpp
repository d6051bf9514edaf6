#pragma once

#include <vector>

#include "hamlift/graph.hpp"

namespace hamlift {

enum class OracleStatus { found, none_exists, budget_exceeded };

/// Result of an exhaustive search. `none_exists` is definitive: it is only
/// reported when the whole pruned search space was exhausted within budget.
/// `expansions` counts search-tree nodes.
struct OracleResult {
  OracleStatus status;
  std::vector<int> vertices;  // filled when status == found
  long long expansions = 0;
};

/// Backtracking hamilton cycle search rooted at vertex 0, expanding
/// neighbours in ascending order. Pruning (reachability and free-incidence
/// counts) never discards a branch that contains a solution.
OracleResult find_hamilton_cycle(const Graph& g, long long budget = 100000000);

/// Hamilton path search, trying start vertices in ascending order with a
/// shared budget.
OracleResult find_hamilton_path(const Graph& g, long long budget = 100000000);

}  // namespace hamlift
