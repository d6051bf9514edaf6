#pragma once

#include <vector>

#include "hamlift/graph.hpp"
#include "hamlift/permgroup.hpp"

namespace hamlift {

/// A Cayley graph description: group plus inverse-closed, identity-free
/// connection set. Vertices of the graph are indices into group.elements().
struct CayleySpec {
  PermGroup group;
  std::vector<Permutation> connection;
};

/// Builds the Cayley graph: vertex i is group.elements()[i]; i and j are
/// adjacent when elements()[j] = elements()[i] * s for some connection
/// element s. Throws std::invalid_argument when the connection set is empty,
/// contains the identity, contains an element outside the group, or is not
/// inverse closed.
Graph cayley_graph(const CayleySpec& spec);

/// Left translations as permutations of the element indices; this group acts
/// on cayley_graph(spec) by automorphisms and is regular.
PermGroup left_multiplication_action(const PermGroup& group);

/// Labels a graph under a regular group action as a Cayley graph of that
/// group: element g gets the vertex g(base) for the smallest base vertex, and
/// the connection set collects the elements moving base to a neighbour.
/// The relabeled graph is rebuilt and compared edge for edge. Throws
/// std::invalid_argument when the action is not transitive with trivial
/// point stabilizers.
struct SabidussiResult {
  CayleySpec spec;
  std::vector<int> vertex_of_element;  // element index -> graph vertex
  std::vector<int> element_of_vertex;  // graph vertex -> element index
};
SabidussiResult sabidussi_labeling(const Graph& g, const PermGroup& group);

}  // namespace hamlift
