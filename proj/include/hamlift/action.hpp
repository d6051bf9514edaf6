#pragma once

#include <utility>
#include <vector>

#include "hamlift/graph.hpp"
#include "hamlift/permgroup.hpp"

namespace hamlift {

/// Throws std::invalid_argument unless the group degree matches the vertex
/// count and every generator maps edges to edges.
void require_automorphism_action(const Graph& g, const PermGroup& group);

/// Single orbit on the full point set.
bool is_transitive(const PermGroup& group);

/// Edge orbits under a group of automorphisms. Each orbit lists its edges as
/// (u, v) with u < v in ascending order; orbits are ordered by smallest edge.
std::vector<std::vector<std::pair<int, int>>> edge_orbits(const Graph& g,
                                                          const PermGroup& group);

/// Greedy removal of whole edge orbits (ascending by smallest edge) as long
/// as the remainder stays connected. Every orbit kept in the result
/// disconnects it when removed, so the result has no proper connected
/// spanning subgraph invariant under the group.
struct ReducedGraph {
  Graph graph;
  std::vector<std::vector<std::pair<int, int>>> kept_orbits;
  std::vector<std::vector<std::pair<int, int>>> removed_orbits;
};
ReducedGraph g_minimal_reduce(const Graph& g, const PermGroup& group);

}  // namespace hamlift
