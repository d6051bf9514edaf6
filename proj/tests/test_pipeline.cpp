#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "hamlift/catalog.hpp"
#include "hamlift/lifting.hpp"
#include "hamlift/pipeline.hpp"

using namespace hamlift;

namespace {

Permutation rot(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) img[static_cast<std::size_t>(v)] = (v + 1) % n;
  return Permutation(img);
}

Permutation refl(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) img[static_cast<std::size_t>(v)] = (n - v) % n;
  return Permutation(img);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph(n, edges);
}

bool has_step(const std::vector<TraceStep>& trace, const std::string& anchor) {
  return std::any_of(trace.begin(), trace.end(),
                     [&](const TraceStep& s) { return s.anchor == anchor; });
}

std::string verdict_of(const std::vector<TraceStep>& trace, const std::string& anchor) {
  for (const auto& s : trace)
    if (s.anchor == anchor) return s.verdict;
  return "";
}

HamiltonReport run(const std::string& name) {
  const CatalogEntry& e = catalog_entry(name);
  HamiltonReport r = hamiltonize(e.graph, e.group);
  if (!r.petersen_exception)
    REQUIRE(verify_certificate(e.graph, {CertKind::cycle, r.cycle}));
  return r;
}

}  // namespace

TEST_CASE("validation records each hypothesis and reports the first failure") {
  std::vector<TraceStep> trace;
  const CatalogEntry& z9 = catalog_entry("z9-cycle");
  TheoremContext ctx = validate_hypotheses(z9.graph, z9.group, &trace);
  CHECK(ctx.derived.is_trivial());
  CHECK(ctx.structure.k == 0);
  REQUIRE(trace.size() == 5);
  CHECK(trace[0].anchor == "connected-graph");
  CHECK(trace[1].anchor == "minimum-order");
  CHECK(trace[1].verdict == "n=9");
  CHECK(trace[2].anchor == "automorphism-action");
  CHECK(trace[3].anchor == "transitive-action");
  CHECK(trace[4].anchor == "commutator-cyclic-prime-power");
  CHECK(trace[4].verdict == "trivial");
  for (std::size_t i = 0; i < trace.size(); ++i)
    CHECK(trace[i].number == static_cast<int>(i) + 1);

  auto anchor_of = [](auto fn) -> std::string {
    try {
      fn();
    } catch (const HypothesisViolation& v) {
      return v.anchor();
    }
    return "";
  };

  CHECK(anchor_of([] {
          validate_hypotheses(Graph(4, {{0, 1}, {2, 3}}), PermGroup::trivial(4));
        }) == "connected-graph");
  const CatalogEntry& k2 = catalog_entry("k2-path");
  CHECK(anchor_of([&] { validate_hypotheses(k2.graph, k2.group); }) == "minimum-order");
  CHECK_NOTHROW(validate_hypotheses(k2.graph, k2.group, nullptr, false));
  CHECK(anchor_of([] {
          validate_hypotheses(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}),
                              PermGroup(4, {Permutation({1, 0, 2, 3})}));
        }) == "automorphism-action");
  CHECK(anchor_of([] {
          validate_hypotheses(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), PermGroup::trivial(4));
        }) == "transitive-action");
  const CatalogEntry& s4 = catalog_entry("s4-regular");
  CHECK(anchor_of([&] { validate_hypotheses(s4.graph, s4.group); }) ==
        "commutator-cyclic-prime-power");
}

TEST_CASE("abelian groups go straight to the edge solver") {
  HamiltonReport r = run("z9-cycle");
  CHECK(r.cycle == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  CHECK_FALSE(r.oracle_assisted);
  CHECK(r.oracle_tags.empty());
  CHECK(verdict_of(r.trace, "abelian-group") == "order=9");
  CHECK(verdict_of(r.trace, "chen-quimpo-solver") == "n=9");
}

TEST_CASE("a transitive derived subgroup makes the whole graph one quotient") {
  HamiltonReport r = run("d5-pentagon");
  CHECK(r.cycle == std::vector<int>{0, 1, 2, 3, 4});
  CHECK_FALSE(r.oracle_assisted);
  CHECK(verdict_of(r.trace, "single-orbit-quotient") == "n=5");
  CHECK(verdict_of(r.trace, "sabidussi-relabeling") == "order=5");
}

TEST_CASE("edgeless orbits with a regular action hand off to the search") {
  HamiltonReport r = run("d3-k33");
  CHECK(r.oracle_assisted);
  CHECK(r.oracle_tags == std::vector<std::string>{"keating-witte"});
  CHECK(verdict_of(r.trace, "g-minimal-reduction") == "kept=2 removed=1");
  CHECK(has_step(r.trace, "orbit-subgraphs-empty"));
  CHECK(verdict_of(r.trace, "minimal-product-normalizer") == "order=1");
  CHECK(verdict_of(r.trace, "keating-witte-cayley") == "n=6");
}

TEST_CASE("edgeless orbits with a proper normalizer assemble constructively") {
  HamiltonReport r = run("heis27-cosets9");
  CHECK(r.cycle == std::vector<int>{4, 0, 6, 3, 2, 8, 5, 1, 7});
  CHECK_FALSE(r.oracle_assisted);
  CHECK(r.oracle_tags.empty());
  CHECK(verdict_of(r.trace, "orbit-subgraphs-empty") == "blocks=3");
  CHECK(verdict_of(r.trace, "minimal-product-normalizer") == "order=3");
  CHECK(verdict_of(r.trace, "edge-hamilton-quotient") == "blocks=3");
  CHECK(verdict_of(r.trace, "path-lift") == "length=3");
  CHECK(verdict_of(r.trace, "factor-group-assembly") == "subgroup-order=3");
}

TEST_CASE("two edged orbits delegate to the search") {
  HamiltonReport r = run("d3-prism");
  CHECK(r.oracle_assisted);
  CHECK(r.oracle_tags == std::vector<std::string>{"alspach-two-orbit"});
  CHECK(verdict_of(r.trace, "orbit-subgraphs-nonempty") == "blocks=2");
  CHECK(verdict_of(r.trace, "connected-odd-orbits") == "p=3");
  CHECK(has_step(r.trace, "two-orbit-quotient"));
}

TEST_CASE("the exceptional graph is recognized, not forced") {
  HamiltonReport r = run("petersen-f20");
  CHECK(r.petersen_exception);
  CHECK(r.cycle.empty());
  CHECK_FALSE(r.oracle_assisted);
  CHECK(verdict_of(r.trace, "petersen-recognition") == "exception");
  CHECK(has_step(r.trace, "two-orbit-quotient"));
}

TEST_CASE("coherent edged orbits lift the derived quotient cycle") {
  HamiltonReport r = run("f40-prism");
  CHECK(r.oracle_assisted);
  CHECK(r.oracle_tags == std::vector<std::string>{"alspach-closed-lift"});
  CHECK(verdict_of(r.trace, "coherence-subgroup") == "order=1");
  CHECK(verdict_of(r.trace, "derived-quotient-lift") == "closed");
}

TEST_CASE("a two-block quotient degenerates to a single cross edge") {
  // C6 under the full dihedral group: derived orbits are the two triangles
  // of alternate vertices, both edgeless, and the point stabilizer only
  // normalizes against the full derived subgroup.
  Graph c6 = cycle_graph(6);
  PermGroup d6(6, {rot(6), refl(6)});
  HamiltonReport r = hamiltonize(c6, d6);
  CHECK(r.cycle == std::vector<int>{5, 0, 1, 2, 3, 4});
  CHECK_FALSE(r.oracle_assisted);
  CHECK(verdict_of(r.trace, "orbit-subgraphs-empty") == "blocks=2");
  CHECK(verdict_of(r.trace, "minimal-product-normalizer") == "order=3");
  CHECK(has_step(r.trace, "k2-degenerate-quotient"));
  CHECK(verdict_of(r.trace, "factor-group-assembly") == "subgroup-order=3");
}

TEST_CASE("quotient cycles recurse through proper chain members") {
  const CatalogEntry& e = catalog_entry("d9-nonagon");
  TheoremContext ctx = validate_hypotheses(e.graph, e.group);
  CHECK(ctx.derived.order() == 9);
  PermGroup h(9, {rot(9).power(3)});

  std::vector<TraceStep> trace;
  QuotientCycleResult res = edge_hamilton_cycle_quotient(ctx, h, {0, 1}, trace);
  CHECK(res.cycle == std::vector<int>{0, 1, 2});
  CHECK_FALSE(res.oracle_assisted);
  CHECK(res.oracle_tags.empty());
  CHECK(verdict_of(trace, "quotient-recursion") == "blocks=3");
  CHECK(has_step(trace, "single-orbit-quotient"));

  // the full derived subgroup leaves a single block: no quotient to cycle
  std::vector<TraceStep> t2;
  CHECK_THROWS_AS(edge_hamilton_cycle_quotient(ctx, ctx.derived, {0, 1}, t2),
                  std::invalid_argument);
  // a subgroup outside the p-th power of the derived subgroup is rejected
  std::vector<TraceStep> t3;
  CHECK_THROWS_AS(edge_hamilton_cycle_quotient(ctx, PermGroup(9, {refl(9)}), {0, 1}, t3),
                  std::invalid_argument);
}

TEST_CASE("quotient cycles by the derived subgroup run the edge solver directly") {
  const CatalogEntry& e = catalog_entry("z16-moebius");
  TheoremContext ctx = validate_hypotheses(e.graph, e.group);
  std::vector<TraceStep> trace;
  QuotientCycleResult res =
      edge_hamilton_cycle_quotient(ctx, PermGroup::trivial(16), {0, 1}, trace);
  CHECK(res.cycle.size() == 16);
  CHECK(res.cycle[0] == 0);
  CHECK(res.cycle[1] == 1);
  CHECK_FALSE(res.oracle_assisted);
  CHECK(verify_certificate(e.graph, {CertKind::cycle, res.cycle}));

  std::vector<TraceStep> t2;
  CHECK_THROWS_AS(edge_hamilton_cycle_quotient(ctx, PermGroup::trivial(16), {0, 2}, t2),
                  std::invalid_argument);
}

TEST_CASE("normalizing subgroup selection") {
  const CatalogEntry& d9 = catalog_entry("d9-nonagon");
  TheoremContext ctx9 = validate_hypotheses(d9.graph, d9.group);
  CHECK(minimal_normalizing_subgroup(ctx9).order() == 9);

  const CatalogEntry& z9 = catalog_entry("z9-cycle");
  TheoremContext ctxz = validate_hypotheses(z9.graph, z9.group);
  CHECK(minimal_normalizing_subgroup(ctxz).is_trivial());
}

TEST_CASE("coherence subgroup selection") {
  const CatalogEntry& f20 = catalog_entry("f20-cayley");
  TheoremContext ctx = validate_hypotheses(f20.graph, f20.group);
  CHECK(cross_orbit_coherence_subgroup(ctx, orbit_partition(ctx.derived)).is_trivial());
}

TEST_CASE("path mode reads the cycle and covers the small cases") {
  const CatalogEntry& z9 = catalog_entry("z9-cycle");
  PathReport pr = hamilton_path(z9.graph, z9.group);
  CHECK(pr.path == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  CHECK_FALSE(pr.oracle_assisted);

  const CatalogEntry& k2 = catalog_entry("k2-path");
  PathReport p2 = hamilton_path(k2.graph, k2.group);
  CHECK(p2.path == std::vector<int>{0, 1});
  CHECK_FALSE(p2.oracle_assisted);

  PathReport p1 = hamilton_path(Graph(1, {}), PermGroup::trivial(1));
  CHECK(p1.path == std::vector<int>{0});

  const CatalogEntry& pet = catalog_entry("petersen-f20");
  PathReport pp = hamilton_path(pet.graph, pet.group);
  CHECK(pp.oracle_assisted);
  CHECK(pp.oracle_tags == std::vector<std::string>{"petersen-path"});
  CHECK(verify_certificate(pet.graph, {CertKind::path, pp.path}));
}

TEST_CASE("lemma suite cross-checks the structural facts") {
  std::vector<const CatalogEntry*> entries = {
      &catalog_entry("z12-chord"), &catalog_entry("d4-cayley"), &catalog_entry("q8-ij"),
      &catalog_entry("heis27-cosets9")};
  auto checks = verify_lemma_suite(entries);
  CHECK(checks.size() == 24);
  for (const auto& c : checks) {
    INFO(c.entry << " / " << c.lemma << ": " << c.detail);
    CHECK(c.passed);
  }
  std::set<std::string> lemmas;
  for (const auto& c : checks) lemmas.insert(c.lemma);
  CHECK(lemmas == std::set<std::string>{"stabilizer-normality-equivalence",
                                        "stabilizer-core-trivial", "derived-chain-normal",
                                        "frattini-power-bound", "frattini-orbit-edgeless",
                                        "edged-orbit-structure"});

  // entries that fail validation are skipped, not failed
  CHECK(verify_lemma_suite({&catalog_entry("s4-regular")}).empty());

  // a trivial derived subgroup makes the power bound vacuous
  auto z5 = verify_lemma_suite({&catalog_entry("z5-cycle")});
  for (const auto& c : z5)
    if (c.lemma == "frattini-power-bound") CHECK(c.detail == "vacuous");
}

TEST_CASE("oracle tag vocabulary is closed") {
  const auto& tags = allowed_oracle_tags();
  CHECK(tags == std::vector<std::string>{"keating-witte", "alspach-two-orbit",
                                         "alspach-closed-lift", "alspach-degree-three"});
  for (const char* name : {"d3-k33", "d3-prism", "f40-prism"}) {
    HamiltonReport r = run(name);
    for (const auto& t : r.oracle_tags)
      CHECK(std::find(tags.begin(), tags.end(), t) != tags.end());
  }
}
