#include "hamlift/abelian_ham.hpp"

#include <deque>
#include <stdexcept>

namespace hamlift {
namespace {

class CycleSearch {
 public:
  CycleSearch(const Graph& g, int anchor)
      : g_(g), anchor_(anchor), visited_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  bool run(int a, int b, std::vector<int>& out) {
    visited_[static_cast<std::size_t>(a)] = 1;
    visited_[static_cast<std::size_t>(b)] = 1;
    out = {a, b};
    return extend(out);
  }

 private:
  bool viable(int cur) const {
    const int n = g_.vertex_count();
    int remaining = 0;
    for (int v = 0; v < n; ++v)
      if (!visited_[static_cast<std::size_t>(v)]) ++remaining;
    if (remaining == 0) return true;
    // Every unvisited vertex still reachable from the current endpoint.
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<int> queue{cur};
    seen[static_cast<std::size_t>(cur)] = 1;
    int reached = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g_.neighbors(v)) {
        if (seen[static_cast<std::size_t>(w)] || visited_[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
    if (reached != remaining) return false;
    // The anchor must stay attachable, and interior vertices need two free
    // incidences (one in, one out).
    bool anchor_open = false;
    for (int v = 0; v < n; ++v) {
      if (visited_[static_cast<std::size_t>(v)]) continue;
      int avail = 0;
      for (int w : g_.neighbors(v)) {
        if (w == cur || w == anchor_ || !visited_[static_cast<std::size_t>(w)]) ++avail;
        if (w == anchor_) anchor_open = true;
      }
      if (avail < 2) return false;
    }
    return anchor_open;
  }

  bool extend(std::vector<int>& path) {
    int cur = path.back();
    if (static_cast<int>(path.size()) == g_.vertex_count())
      return g_.has_edge(cur, anchor_);
    if (!viable(cur)) return false;
    for (int w : g_.neighbors(cur)) {
      if (visited_[static_cast<std::size_t>(w)]) continue;
      visited_[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      if (extend(path)) return true;
      path.pop_back();
      visited_[static_cast<std::size_t>(w)] = 0;
    }
    return false;
  }

  const Graph& g_;
  int anchor_;
  std::vector<char> visited_;
};

// Two-coloring; a bipartite graph with unequal sides has no hamilton cycle.
bool parity_obstruction(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::deque<int> queue{0};
  color[0] = 0;
  int counts[2] = {1, 0};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (color[static_cast<std::size_t>(w)] == -1) {
        color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
        ++counts[color[static_cast<std::size_t>(w)]];
        queue.push_back(w);
      } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
        return false;  // odd cycle: no bipartition, no obstruction
      }
    }
  }
  return counts[0] != counts[1];
}

}  // namespace

std::vector<int> hamilton_cycle_through_edge(const CayleySpec& spec, std::pair<int, int> edge) {
  if (!spec.group.is_abelian()) throw std::invalid_argument("group is not abelian");
  Graph g = cayley_graph(spec);
  if (g.vertex_count() < 3)
    throw std::invalid_argument("hamilton cycles need at least 3 vertices");
  if (!is_connected(g))
    throw std::invalid_argument("connection set does not generate the group");
  auto [a, b] = edge;
  if (!g.has_edge(a, b)) throw std::invalid_argument("selected pair is not an edge");
  if (parity_obstruction(g))
    throw std::logic_error("unbalanced bipartition in a connected abelian cayley graph");
  std::vector<int> out;
  if (!CycleSearch(g, a).run(a, b, out))
    throw std::logic_error("edge search exhausted on an abelian cayley graph");
  return out;
}

std::vector<int> hamilton_cycle_abelian(const CayleySpec& spec) {
  Graph g = cayley_graph(spec);
  if (g.vertex_count() < 3 || g.neighbors(0).empty())
    throw std::invalid_argument("hamilton cycles need at least 3 vertices");
  return hamilton_cycle_through_edge(spec, {0, g.neighbors(0).front()});
}

}  // namespace hamlift
