#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamlift/cayley.hpp"
#include "hamlift/graph.hpp"
#include "hamlift/permgroup.hpp"

namespace hamlift {

/// A named graph together with a transitive group acting on it by
/// automorphisms. When the action is regular and the graph was built as a
/// Cayley graph, `cayley` holds that description (graph == cayley_graph(*cayley)).
struct CatalogEntry {
  std::string name;
  std::string summary;
  Graph graph;
  PermGroup group;
  std::optional<CayleySpec> cayley;
};

/// Built once; ordered by name.
const std::vector<CatalogEntry>& catalog();

/// Throws std::invalid_argument on an unknown name.
const CatalogEntry& catalog_entry(const std::string& name);

/// Entries that are Cayley graphs of abelian groups with 3..32 vertices,
/// the population for the all-edges solver sweep.
std::vector<const CatalogEntry*> abelian_cayley_samples();

}  // namespace hamlift
