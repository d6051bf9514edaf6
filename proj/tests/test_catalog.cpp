#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "hamlift/action.hpp"
#include "hamlift/catalog.hpp"

using namespace hamlift;

TEST_CASE("catalog is sorted, named uniquely, sized as expected") {
  const auto& entries = catalog();
  CHECK(entries.size() == 35);
  std::set<std::string> names;
  for (const auto& e : entries) names.insert(e.name);
  CHECK(names.size() == entries.size());
  CHECK(std::is_sorted(entries.begin(), entries.end(),
                       [](const auto& a, const auto& b) { return a.name < b.name; }));
}

TEST_CASE("every entry is a transitive automorphism action") {
  for (const auto& e : catalog()) {
    INFO(e.name);
    CHECK(e.group.degree() == e.graph.vertex_count());
    CHECK_NOTHROW(require_automorphism_action(e.graph, e.group));
    CHECK(is_transitive(e.group));
    CHECK(is_connected(e.graph));
    CHECK_FALSE(e.summary.empty());
  }
}

TEST_CASE("cayley descriptions rebuild the stored graph") {
  for (const auto& e : catalog()) {
    if (!e.cayley.has_value()) continue;
    INFO(e.name);
    CHECK(cayley_graph(*e.cayley) == e.graph);
    CHECK(e.cayley->group.order() == e.graph.vertex_count());
  }
}

TEST_CASE("entry lookup") {
  CHECK(catalog_entry("z9-cycle").graph.vertex_count() == 9);
  CHECK_THROWS_AS(catalog_entry("no-such-entry"), std::invalid_argument);
}

TEST_CASE("spot checks on orders and degrees") {
  CHECK(catalog_entry("petersen-f20").group.order() == 20);
  CHECK(catalog_entry("petersen-f20").graph.vertex_count() == 10);
  CHECK(catalog_entry("heis27-cayley").graph.vertex_count() == 27);
  CHECK(catalog_entry("heis27-cosets9").graph.vertex_count() == 9);
  CHECK(catalog_entry("heis27-cosets9").group.order() == 27);
  CHECK(catalog_entry("f20-k5").group.order() == 20);
  CHECK(catalog_entry("f40-prism").graph.vertex_count() == 20);
  CHECK(catalog_entry("f40-prism").group.order() == 40);
  CHECK(catalog_entry("dic12").graph.vertex_count() == 12);
  CHECK(catalog_entry("s4-regular").graph.vertex_count() == 24);
  CHECK(catalog_entry("z64-cycle").graph.vertex_count() == 64);
  CHECK(catalog_entry("d4-reflections").graph.degree(0) == 4);
  CHECK(catalog_entry("z2z2z2-cube").graph.degree(0) == 3);
}

TEST_CASE("abelian sample selection") {
  auto samples = abelian_cayley_samples();
  CHECK(samples.size() == 14);
  std::set<std::string> names;
  for (const auto* e : samples) {
    names.insert(e->name);
    CHECK(e->cayley.has_value());
    CHECK(e->cayley->group.is_abelian());
    CHECK(e->graph.vertex_count() >= 3);
    CHECK(e->graph.vertex_count() <= 32);
  }
  CHECK(names.count("z9-cycle") == 1);
  CHECK(names.count("z32-circulant") == 1);
  CHECK(names.count("z64-cycle") == 0);   // too large
  CHECK(names.count("k2-path") == 0);     // too small
  CHECK(names.count("d3-prism") == 0);    // not abelian
}
