#pragma once

#include <utility>
#include <vector>

#include "hamlift/cayley.hpp"

namespace hamlift {

/// Hamilton cycle through a prescribed edge of a connected Cayley graph of an
/// abelian group on at least 3 vertices; such a cycle always exists, so an
/// exhausted search throws std::logic_error. Vertices are element indices of
/// spec.group; the result starts with edge.first, edge.second. Backtracking
/// with degree, reachability and parity pruning keeps this fast at the sizes
/// the solver is meant for.
std::vector<int> hamilton_cycle_through_edge(const CayleySpec& spec, std::pair<int, int> edge);

/// Hamilton cycle through the lexicographically smallest edge at vertex 0.
std::vector<int> hamilton_cycle_abelian(const CayleySpec& spec);

}  // namespace hamlift
