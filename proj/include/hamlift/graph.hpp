#pragma once

#include <utility>
#include <vector>

#include "hamlift/quotient.hpp"

namespace hamlift {

/// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  /// Edges may be given in either orientation; loops and duplicates are
  /// rejected with std::invalid_argument.
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  const std::vector<int>& neighbors(int v) const;  // ascending
  bool has_edge(int u, int v) const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool is_regular() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

bool is_connected(const Graph& g);

/// Length of a shortest cycle; -1 when the graph is acyclic.
int girth(const Graph& g);

/// 10 vertices, 3-regular, girth 5 characterises the Petersen graph.
bool is_petersen(const Graph& g);

/// Block graph of a partition: two blocks are adjacent when some edge crosses
/// them. Edges inside a block never become loops; they set the block's flag.
struct BlockQuotient {
  Graph graph;
  QuotientMap map;
  std::vector<char> block_has_inner_edge;
};
BlockQuotient quotient_graph(const Graph& g, const QuotientMap& q);

/// Subgraph on a vertex subset, renumbered 0..k-1 in ascending vertex order.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_of;  // new index -> original vertex
  std::vector<int> index_of;   // original vertex -> new index, -1 outside
};
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace hamlift
