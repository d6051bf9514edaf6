#include "hamlift/action.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace hamlift {
namespace {

std::pair<int, int> canon(int u, int v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

}  // namespace

void require_automorphism_action(const Graph& g, const PermGroup& group) {
  if (group.degree() != g.vertex_count())
    throw std::invalid_argument("group degree does not match the vertex count");
  for (const auto& gen : group.generators())
    for (auto [u, v] : g.edges())
      if (!g.has_edge(gen(u), gen(v)))
        throw std::invalid_argument("a generator does not preserve the edge set");
}

bool is_transitive(const PermGroup& group) {
  return static_cast<int>(orbit(group, 0).size()) == group.degree();
}

std::vector<std::vector<std::pair<int, int>>> edge_orbits(const Graph& g,
                                                          const PermGroup& group) {
  require_automorphism_action(g, group);
  std::set<std::pair<int, int>> remaining;
  for (auto e : g.edges()) remaining.insert(e);
  std::vector<std::vector<std::pair<int, int>>> orbits;
  while (!remaining.empty()) {
    std::pair<int, int> seed = *remaining.begin();  // smallest unplaced edge
    std::set<std::pair<int, int>> members{seed};
    std::deque<std::pair<int, int>> queue{seed};
    while (!queue.empty()) {
      auto [u, v] = queue.front();
      queue.pop_front();
      for (const auto& gen : group.generators()) {
        auto img = canon(gen(u), gen(v));
        if (members.insert(img).second) queue.push_back(img);
      }
    }
    for (const auto& e : members) remaining.erase(e);
    orbits.emplace_back(members.begin(), members.end());
  }
  return orbits;
}

ReducedGraph g_minimal_reduce(const Graph& g, const PermGroup& group) {
  auto orbits = edge_orbits(g, group);
  std::vector<std::pair<int, int>> current = g.edges();
  std::vector<std::vector<std::pair<int, int>>> kept, removed;
  for (const auto& orb : orbits) {
    std::vector<std::pair<int, int>> trial;
    std::set<std::pair<int, int>> drop(orb.begin(), orb.end());
    for (const auto& e : current)
      if (!drop.count(e)) trial.push_back(e);
    Graph candidate(g.vertex_count(), trial);
    if (is_connected(candidate)) {
      current = std::move(trial);
      removed.push_back(orb);
    } else {
      kept.push_back(orb);
    }
  }
  // Orbits kept here stay cuts: later removals only delete more edges, and a
  // spanning subgraph of a disconnected graph is disconnected.
  return ReducedGraph{Graph(g.vertex_count(), current), std::move(kept), std::move(removed)};
}

}  // namespace hamlift
