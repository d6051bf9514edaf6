#include "hamlift/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace hamlift {

QuotientMap QuotientMap::from_assignment(const std::vector<int>& raw_block_of) {
  const int n = static_cast<int>(raw_block_of.size());
  if (n == 0) throw std::invalid_argument("partition of an empty vertex set");
  // Renumber blocks by ascending smallest member.
  std::map<int, int> renumber;
  for (int v = 0; v < n; ++v) {
    int raw = raw_block_of[static_cast<std::size_t>(v)];
    if (raw < 0) throw std::invalid_argument("negative block id in partition");
    renumber.emplace(raw, -1);
  }
  {
    std::set<int> seen;
    int next = 0;
    for (int v = 0; v < n; ++v) {
      int raw = raw_block_of[static_cast<std::size_t>(v)];
      if (seen.insert(raw).second) renumber[raw] = next++;
    }
  }
  QuotientMap q;
  q.block_of.resize(static_cast<std::size_t>(n));
  q.blocks.resize(renumber.size());
  for (int v = 0; v < n; ++v) {
    int b = renumber.at(raw_block_of[static_cast<std::size_t>(v)]);
    q.block_of[static_cast<std::size_t>(v)] = b;
    q.blocks[static_cast<std::size_t>(b)].push_back(v);
  }
  return q;
}

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list)
    : adj_(static_cast<std::size_t>(std::max(vertex_count, 0))) {
  if (vertex_count <= 0) throw std::invalid_argument("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    auto e = std::minmax(u, v);
    if (!seen.insert({e.first, e.second}).second)
      throw std::invalid_argument("duplicate edge");
  }
  for (auto [u, v] : seen) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  edge_count_ = static_cast<int>(seen.size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= vertex_count()) throw std::invalid_argument("vertex out of range");
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count()) return false;
  const auto& nbrs = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_regular() const {
  for (int v = 1; v < vertex_count(); ++v)
    if (degree(v) != degree(0)) return false;
  return true;
}

bool is_connected(const Graph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v))
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        queue.push_back(w);
      }
  }
  return reached == g.vertex_count();
}

int girth(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  const int n = g.vertex_count();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> queue{s};
    dist[static_cast<std::size_t>(s)] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      if (2 * dist[static_cast<std::size_t>(v)] >= best) break;
      for (int w : g.neighbors(v)) {
        if (dist[static_cast<std::size_t>(w)] == -1) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          parent[static_cast<std::size_t>(w)] = v;
          queue.push_back(w);
        } else if (w != parent[static_cast<std::size_t>(v)]) {
          best = std::min(best,
                          dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<int>::max() ? -1 : best;
}

bool is_petersen(const Graph& g) {
  if (g.vertex_count() != 10 || g.edge_count() != 15) return false;
  for (int v = 0; v < 10; ++v)
    if (g.degree(v) != 3) return false;
  return girth(g) == 5;
}

BlockQuotient quotient_graph(const Graph& g, const QuotientMap& q) {
  if (q.vertex_count() != g.vertex_count())
    throw std::invalid_argument("partition does not match the vertex set");
  std::vector<char> inner(static_cast<std::size_t>(q.block_count()), 0);
  std::set<std::pair<int, int>> block_edges;
  for (auto [u, v] : g.edges()) {
    int bu = q.block_of[static_cast<std::size_t>(u)];
    int bv = q.block_of[static_cast<std::size_t>(v)];
    if (bu == bv) {
      inner[static_cast<std::size_t>(bu)] = 1;
    } else {
      auto e = std::minmax(bu, bv);
      block_edges.insert({e.first, e.second});
    }
  }
  Graph quotient(q.block_count(),
                 std::vector<std::pair<int, int>>(block_edges.begin(), block_edges.end()));
  return BlockQuotient{std::move(quotient), q, std::move(inner)};
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("induced subgraph needs vertices");
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate vertex in induced subgraph");
  std::vector<int> index_of(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    int v = sorted[i];
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced subgraph vertex out of range");
    index_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    int iu = index_of[static_cast<std::size_t>(u)];
    int iv = index_of[static_cast<std::size_t>(v)];
    if (iu != -1 && iv != -1) edges.emplace_back(iu, iv);
  }
  Graph sub(static_cast<int>(sorted.size()), edges);
  return InducedSubgraph{std::move(sub), std::move(sorted), std::move(index_of)};
}

}  // namespace hamlift
