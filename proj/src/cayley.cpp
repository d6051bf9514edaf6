#include "hamlift/cayley.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hamlift/action.hpp"

namespace hamlift {
namespace {

int element_index(const PermGroup& group, const Permutation& p) {
  const auto& elems = group.elements();
  auto it = std::lower_bound(elems.begin(), elems.end(), p);
  if (it == elems.end() || !(*it == p))
    throw std::invalid_argument("permutation is not a group element");
  return static_cast<int>(it - elems.begin());
}

}  // namespace

Graph cayley_graph(const CayleySpec& spec) {
  if (spec.connection.empty()) throw std::invalid_argument("empty connection set");
  std::set<Permutation> conn(spec.connection.begin(), spec.connection.end());
  for (const auto& s : conn) {
    if (s.is_identity()) throw std::invalid_argument("identity in the connection set");
    if (!spec.group.contains(s))
      throw std::invalid_argument("connection element outside the group");
    if (!conn.count(s.inverse()))
      throw std::invalid_argument("connection set is not inverse closed");
  }
  const auto& elems = spec.group.elements();
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(elems.size()); ++i)
    for (const auto& s : conn) {
      int j = element_index(spec.group, elems[static_cast<std::size_t>(i)] * s);
      if (i < j) edges.emplace_back(i, j);
    }
  return Graph(static_cast<int>(elems.size()), edges);
}

PermGroup left_multiplication_action(const PermGroup& group) {
  const auto& elems = group.elements();
  const int n = static_cast<int>(elems.size());
  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      img[static_cast<std::size_t>(i)] =
          element_index(group, g * elems[static_cast<std::size_t>(i)]);
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, gens);
}

SabidussiResult sabidussi_labeling(const Graph& g, const PermGroup& group) {
  require_automorphism_action(g, group);
  if (!is_transitive(group))
    throw std::invalid_argument("sabidussi labeling needs a transitive action");
  if (group.order() != g.vertex_count())
    throw std::invalid_argument("sabidussi labeling needs trivial point stabilizers");
  const int base = 0;
  const auto& elems = group.elements();
  const int n = g.vertex_count();
  std::vector<int> vertex_of(static_cast<std::size_t>(n));
  std::vector<int> element_of(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = elems[static_cast<std::size_t>(i)](base);
    vertex_of[static_cast<std::size_t>(i)] = v;
    if (element_of[static_cast<std::size_t>(v)] != -1)
      throw std::invalid_argument("sabidussi labeling needs trivial point stabilizers");
    element_of[static_cast<std::size_t>(v)] = i;
  }
  std::vector<Permutation> connection;
  for (int w : g.neighbors(base))
    connection.push_back(elems[static_cast<std::size_t>(element_of[static_cast<std::size_t>(w)])]);
  CayleySpec spec{group, std::move(connection)};
  // Round trip: the Cayley graph on the labels must reproduce g exactly.
  Graph rebuilt = cayley_graph(spec);
  if (rebuilt.edge_count() != g.edge_count())
    throw std::logic_error("cayley relabeling changed the edge count");
  for (auto [i, j] : rebuilt.edges())
    if (!g.has_edge(vertex_of[static_cast<std::size_t>(i)], vertex_of[static_cast<std::size_t>(j)]))
      throw std::logic_error("cayley relabeling broke an adjacency");
  return SabidussiResult{std::move(spec), std::move(vertex_of), std::move(element_of)};
}

}  // namespace hamlift
