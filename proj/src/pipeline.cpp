#include "hamlift/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>

#include "hamlift/abelian_ham.hpp"
#include "hamlift/action.hpp"
#include "hamlift/cayley.hpp"
#include "hamlift/lifting.hpp"
#include "hamlift/oracle.hpp"

namespace hamlift {
namespace {

void push(std::vector<TraceStep>& trace, std::string anchor, std::string verdict) {
  trace.push_back(
      TraceStep{static_cast<int>(trace.size()) + 1, std::move(anchor), std::move(verdict)});
}

/// Derived chain including the trivial bottom; degenerates to {e} when the
/// derived subgroup is trivial.
std::vector<PermGroup> derived_chain(const TheoremContext& ctx) {
  if (ctx.structure.k == 0) return {PermGroup::trivial(ctx.group.degree())};
  return cyclic_subgroup_chain(ctx.derived, ctx.structure.p);
}

std::vector<int> oracle_cycle_or_throw(const Graph& g) {
  OracleResult r = find_hamilton_cycle(g);
  if (r.status == OracleStatus::none_exists)
    throw InternalInconsistency(
        "exhaustive search found no hamilton cycle where the structure theory requires one");
  if (r.status == OracleStatus::budget_exceeded)
    throw std::runtime_error("exhaustive cycle search exceeded its budget");
  return r.vertices;
}

/// Action of the group on the blocks of an invariant partition. Every
/// generator must map blocks onto blocks.
PermGroup induced_block_action(const PermGroup& group, const QuotientMap& q) {
  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) {
    std::vector<int> img(static_cast<std::size_t>(q.block_count()), -1);
    for (int v = 0; v < q.vertex_count(); ++v) {
      int b = q.block_of[static_cast<std::size_t>(v)];
      int ib = q.block_of[static_cast<std::size_t>(g(v))];
      int& slot = img[static_cast<std::size_t>(b)];
      if (slot == -1)
        slot = ib;
      else if (slot != ib)
        throw InternalInconsistency("the group does not permute the given blocks");
    }
    gens.emplace_back(img);
  }
  return PermGroup(q.block_count(), gens);
}

/// Hamilton cycle of g from its regular abelian group of automorphisms,
/// optionally through a prescribed edge. The relabeling step and the solver
/// step each leave a trace entry.
std::vector<int> regular_abelian_cycle(const Graph& g, const PermGroup& acting,
                                       std::optional<std::pair<int, int>> edge,
                                       std::vector<TraceStep>& trace) {
  if (!acting.is_abelian())
    throw InternalInconsistency("the quotient action expected here is always abelian");
  SabidussiResult sab = sabidussi_labeling(g, acting);
  push(trace, "sabidussi-relabeling", "order=" + std::to_string(acting.order()));
  std::vector<int> elem_cycle;
  if (edge) {
    elem_cycle = hamilton_cycle_through_edge(
        sab.spec, {sab.element_of_vertex[static_cast<std::size_t>(edge->first)],
                   sab.element_of_vertex[static_cast<std::size_t>(edge->second)]});
  } else {
    elem_cycle = hamilton_cycle_abelian(sab.spec);
  }
  push(trace, "chen-quimpo-solver", "n=" + std::to_string(g.vertex_count()));
  std::vector<int> out;
  out.reserve(elem_cycle.size());
  for (int e : elem_cycle) out.push_back(sab.vertex_of_element[static_cast<std::size_t>(e)]);
  return out;
}

bool in_orbit(const PermGroup& h, int base, int v) {
  std::vector<int> orb = orbit(h, base);
  return std::binary_search(orb.begin(), orb.end(), v);
}

struct RouteOutcome {
  std::vector<int> cycle;
  bool oracle_assisted = false;
  std::vector<std::string> tags;
};

/// Factor-group assembly around a subgroup h of the derived chain. Finds an
/// edge separating the cosets of h's p-th power extension, builds a hamilton
/// path of the h-block quotient through that edge, lifts it, and rotates the
/// lift through h. `cross_filter`, when given, restricts the edge scan to
/// edges crossing its blocks (the derived orbits).
RouteOutcome fgl_route(const TheoremContext& ctx, const PermGroup& h,
                       const QuotientMap* cross_filter, std::vector<TraceStep>& trace) {
  const Graph& g = ctx.graph;
  const int n = g.vertex_count();
  PermGroup hp = power_subgroup(h, ctx.structure.p);
  QuotientMap hq = orbit_partition(h);

  std::vector<std::optional<PermGroup>> stab_cache(static_cast<std::size_t>(n));
  auto stab = [&](int v) -> const PermGroup& {
    auto& slot = stab_cache[static_cast<std::size_t>(v)];
    if (!slot) slot = stabilizer(ctx.group, v);
    return *slot;
  };
  auto hp_product = [&](int v) { return product_subgroup(hp, stab(v), ctx.group); };

  // The separating edge: ends in different h-blocks (and different filter
  // blocks when a filter applies) whose hp*stabilizer products differ.
  std::optional<std::pair<int, int>> sep;
  for (int a = 0; a < n && !sep; ++a) {
    for (int b : g.neighbors(a)) {
      if (cross_filter && cross_filter->block_of[static_cast<std::size_t>(a)] ==
                              cross_filter->block_of[static_cast<std::size_t>(b)])
        continue;
      if (hq.block_of[static_cast<std::size_t>(a)] == hq.block_of[static_cast<std::size_t>(b)])
        continue;
      if (!same_group(hp_product(a), hp_product(b))) {
        sep = std::pair{a, b};
        break;
      }
    }
  }
  if (!sep) throw InternalInconsistency("no edge separates the power-subgroup products");
  const int x1 = sep->first, u = sep->second;

  // A stabilizer element of x1 pushing u out of the hp-orbit; it stays inside
  // the h-orbit because h * stab(x1) = h * stab(u) absorbs it.
  std::optional<Permutation> gamma;
  for (const auto& s : stab(x1).elements()) {
    if (!in_orbit(hp, u, s(u))) {
      gamma = s;
      break;
    }
  }
  if (!gamma)
    throw InternalInconsistency("no stabilizer element escapes the power-subgroup orbit");
  if (!in_orbit(h, u, (*gamma)(u)))
    throw InternalInconsistency("the stabilizer pushed the neighbour outside its subgroup orbit");

  RouteOutcome out;
  const int bx = hq.block_of[static_cast<std::size_t>(x1)];
  const int bu = hq.block_of[static_cast<std::size_t>(u)];
  std::vector<int> lifted;
  if (hq.block_count() == 2) {
    // A two-block quotient has no hamilton cycle to route through; the
    // B A B walk of the assembly step only needs one cross edge.
    push(trace, "k2-degenerate-quotient", "blocks=2");
    int step = -1;
    for (int w : g.neighbors(x1)) {
      if (hq.block_of[static_cast<std::size_t>(w)] == bu) {
        step = w;
        break;
      }
    }
    lifted = {x1, step};
  } else {
    push(trace, "edge-hamilton-quotient", "blocks=" + std::to_string(hq.block_count()));
    QuotientCycleResult qr = edge_hamilton_cycle_quotient(ctx, h, {bx, bu}, trace);
    out.oracle_assisted = qr.oracle_assisted;
    out.tags = qr.oracle_tags;
    std::vector<int> c = qr.cycle;
    auto at = std::find(c.begin(), c.end(), bx);
    std::rotate(c.begin(), at, c.end());
    if (c[1] == bu) std::reverse(c.begin() + 1, c.end());
    if (c.back() != bu)
      throw InternalInconsistency("requested edge lost while orienting the block cycle");
    lifted = lift_path(g, hq, c, x1);
    push(trace, "path-lift", "length=" + std::to_string(lifted.size()));
  }

  // Front the lift with whichever of u, gamma(u) keeps the ends in distinct
  // hp-orbits; they cannot both fail without collapsing gamma(u) into hp*u.
  const int endpoint = lifted.back();
  std::optional<int> front;
  for (int f : {u, (*gamma)(u)}) {
    if (!in_orbit(hp, f, endpoint)) {
      front = f;
      break;
    }
  }
  if (!front)
    throw InternalInconsistency("both front candidates share the lift endpoint's orbit");

  std::vector<int> path;
  path.reserve(lifted.size() + 1);
  path.push_back(*front);
  path.insert(path.end(), lifted.begin(), lifted.end());
  HamiltonCertificate cert = factor_group_cycle(g, h, path);
  push(trace, "factor-group-assembly", "subgroup-order=" + std::to_string(h.order()));
  out.cycle = cert.vertices;
  return out;
}

}  // namespace

TheoremContext validate_hypotheses(const Graph& graph, const PermGroup& group,
                                   std::vector<TraceStep>* trace, bool enforce_size) {
  std::vector<TraceStep> local;
  std::vector<TraceStep>& t = trace ? *trace : local;

  if (!is_connected(graph))
    throw HypothesisViolation("connected-graph", "the graph is not connected");
  push(t, "connected-graph", "ok");

  if (enforce_size) {
    if (graph.vertex_count() < 3)
      throw HypothesisViolation("minimum-order", "a cycle needs at least 3 vertices, got " +
                                                     std::to_string(graph.vertex_count()));
    push(t, "minimum-order", "n=" + std::to_string(graph.vertex_count()));
  }

  try {
    require_automorphism_action(graph, group);
  } catch (const std::invalid_argument& e) {
    throw HypothesisViolation("automorphism-action", e.what());
  }
  push(t, "automorphism-action", "ok");

  if (!is_transitive(group))
    throw HypothesisViolation("transitive-action", "the action has more than one vertex orbit");
  push(t, "transitive-action", "ok");

  PermGroup derived = commutator_subgroup(group);
  auto structure = cyclic_prime_power_structure(derived);
  if (!structure)
    throw HypothesisViolation("commutator-cyclic-prime-power",
                              "the commutator subgroup (order " +
                                  std::to_string(derived.order()) +
                                  ") is not cyclic of prime-power order");
  push(t, "commutator-cyclic-prime-power",
       structure->k == 0 ? "trivial" : "order=" + std::to_string(derived.order()));
  return TheoremContext{graph, group, std::move(derived), *structure};
}

PermGroup minimal_normalizing_subgroup(const TheoremContext& ctx) {
  PermGroup stab0 = stabilizer(ctx.group, 0);
  for (const auto& h : derived_chain(ctx)) {
    PermGroup prod = product_subgroup(h, stab0, ctx.group);
    if (is_normal(ctx.group, prod)) return h;
  }
  throw InternalInconsistency("no derived-chain member normalizes with the stabilizer");
}

PermGroup cross_orbit_coherence_subgroup(const TheoremContext& ctx, const QuotientMap& orbits) {
  const int n = ctx.graph.vertex_count();
  std::vector<PermGroup> stabs;
  stabs.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) stabs.push_back(stabilizer(ctx.group, v));

  std::vector<std::pair<int, int>> cross;
  for (auto [u, v] : ctx.graph.edges())
    if (orbits.block_of[static_cast<std::size_t>(u)] !=
        orbits.block_of[static_cast<std::size_t>(v)])
      cross.emplace_back(u, v);

  for (const auto& h : derived_chain(ctx)) {
    bool coherent = true;
    for (auto [u, v] : cross) {
      if (!same_group(product_subgroup(h, stabs[static_cast<std::size_t>(u)], ctx.group),
                      product_subgroup(h, stabs[static_cast<std::size_t>(v)], ctx.group))) {
        coherent = false;
        break;
      }
    }
    if (coherent) return h;
  }
  throw InternalInconsistency("the derived subgroup itself must be coherent across edges");
}

QuotientCycleResult edge_hamilton_cycle_quotient(const TheoremContext& ctx, const PermGroup& h,
                                                 std::pair<int, int> block_edge,
                                                 std::vector<TraceStep>& trace) {
  QuotientMap hq = orbit_partition(h);
  BlockQuotient bq = quotient_graph(ctx.graph, hq);
  const int blocks = hq.block_count();
  if (blocks < 3)
    throw std::invalid_argument("a block quotient cycle needs at least 3 blocks");
  if (!bq.graph.has_edge(block_edge.first, block_edge.second))
    throw std::invalid_argument("the requested pair is not an edge of the block graph");

  if (same_group(h, ctx.derived)) {
    PermGroup induced = induced_block_action(ctx.group, hq);
    return QuotientCycleResult{regular_abelian_cycle(bq.graph, induced, block_edge, trace),
                               false,
                               {}};
  }

  // Proper chain member: the blocks quotient must again be minimal for the
  // induced action, so every edge orbit of it is a cut and every hamilton
  // cycle crosses every orbit. That guarantees the translate scan below.
  PermGroup derived_p = power_subgroup(ctx.derived, ctx.structure.p);
  if (!h.is_subgroup_of(derived_p))
    throw std::invalid_argument(
        "a proper quotient subgroup must lie inside the p-th power of the derived subgroup");
  PermGroup induced = induced_block_action(ctx.group, hq);
  ReducedGraph red = g_minimal_reduce(bq.graph, induced);
  if (!red.removed_orbits.empty())
    throw InternalInconsistency("the block graph of a proper chain member must stay minimal");
  push(trace, "quotient-recursion", "blocks=" + std::to_string(blocks));

  QuotientCycleResult out;
  if (blocks <= 8 && induced.order() == blocks) {
    push(trace, "keating-witte-cayley", "n=" + std::to_string(blocks));
    out.cycle = oracle_cycle_or_throw(bq.graph);
    out.oracle_assisted = true;
    out.oracle_tags.push_back("keating-witte");
  } else {
    HamiltonReport inner = hamiltonize(bq.graph, induced);
    if (inner.petersen_exception)
      throw InternalInconsistency("a proper quotient reached the exceptional graph");
    out.cycle = inner.cycle;
    out.oracle_assisted = inner.oracle_assisted;
    out.oracle_tags = inner.oracle_tags;
    for (const auto& step : inner.trace) push(trace, step.anchor, step.verdict);
  }

  // Some translate of the cycle crosses the requested edge.
  const int m = static_cast<int>(out.cycle.size());
  for (const auto& g : induced.elements()) {
    std::vector<int> moved(out.cycle.size());
    std::vector<int> pos(out.cycle.size());
    for (int i = 0; i < m; ++i) {
      moved[static_cast<std::size_t>(i)] = g(out.cycle[static_cast<std::size_t>(i)]);
      pos[static_cast<std::size_t>(moved[static_cast<std::size_t>(i)])] = i;
    }
    int d = std::abs(pos[static_cast<std::size_t>(block_edge.first)] -
                     pos[static_cast<std::size_t>(block_edge.second)]);
    if (d == 1 || d == m - 1) {
      out.cycle = std::move(moved);
      return out;
    }
  }
  throw InternalInconsistency("no translate of the quotient cycle crosses the requested edge");
}

HamiltonReport hamiltonize(const Graph& graph, const PermGroup& group) {
  HamiltonReport report;
  TheoremContext base = validate_hypotheses(graph, group, &report.trace, true);

  ReducedGraph red = g_minimal_reduce(graph, group);
  push(report.trace, "g-minimal-reduction",
       "kept=" + std::to_string(red.kept_orbits.size()) +
           " removed=" + std::to_string(red.removed_orbits.size()));
  TheoremContext ctx{red.graph, base.group, base.derived, base.structure};

  QuotientMap dq = orbit_partition(ctx.derived);
  BlockQuotient dbq = quotient_graph(ctx.graph, dq);
  bool edged = std::find(dbq.block_has_inner_edge.begin(), dbq.block_has_inner_edge.end(),
                         char(1)) != dbq.block_has_inner_edge.end();

  RouteOutcome route;
  if (dq.block_count() == 1) {
    // The derived subgroup is transitive; being cyclic it acts regularly and
    // the whole graph is one abelian Cayley graph.
    push(report.trace, "single-orbit-quotient", "n=" + std::to_string(ctx.graph.vertex_count()));
    route.cycle = regular_abelian_cycle(ctx.graph, ctx.derived, std::nullopt, report.trace);
  } else if (ctx.group.is_abelian()) {
    push(report.trace, "abelian-group", "order=" + std::to_string(ctx.group.order()));
    route.cycle = regular_abelian_cycle(ctx.graph, ctx.group, std::nullopt, report.trace);
  } else if (!edged) {
    push(report.trace, "orbit-subgraphs-empty", "blocks=" + std::to_string(dq.block_count()));
    PermGroup h = minimal_normalizing_subgroup(ctx);
    push(report.trace, "minimal-product-normalizer", "order=" + std::to_string(h.order()));
    if (h.is_trivial()) {
      if (stabilizer(ctx.group, 0).order() != 1)
        throw InternalInconsistency("a trivial normalizer certifies a regular action");
      push(report.trace, "keating-witte-cayley", "n=" + std::to_string(ctx.graph.vertex_count()));
      route.cycle = oracle_cycle_or_throw(ctx.graph);
      route.oracle_assisted = true;
      route.tags = {"keating-witte"};
    } else {
      route = fgl_route(ctx, h, nullptr, report.trace);
    }
  } else {
    // Edged derived orbits: only an odd prime with connected orbit rings
    // survives the reduction.
    if (ctx.structure.p % 2 == 0)
      throw InternalInconsistency("edged derived orbits require an odd prime");
    for (const auto& block : dq.blocks) {
      if (!is_connected(induced_subgraph(ctx.graph, block).graph))
        throw InternalInconsistency("an edged derived orbit must induce a connected subgraph");
    }
    push(report.trace, "orbit-subgraphs-nonempty", "blocks=" + std::to_string(dq.block_count()));
    push(report.trace, "connected-odd-orbits", "p=" + std::to_string(ctx.structure.p));

    if (dq.block_count() == 2) {
      push(report.trace, "two-orbit-quotient", "ok");
      const bool reduced_pet = is_petersen(ctx.graph);
      if (reduced_pet && is_petersen(graph)) {
        push(report.trace, "petersen-recognition", "exception");
        OracleResult r = find_hamilton_cycle(graph);
        if (r.status != OracleStatus::none_exists)
          throw InternalInconsistency("the exceptional graph admitted a hamilton cycle");
        report.petersen_exception = true;
        return report;
      }
      if (reduced_pet) {
        push(report.trace, "petersen-recognition", "reduced-only");
        route.cycle = oracle_cycle_or_throw(graph);
      } else {
        route.cycle = oracle_cycle_or_throw(ctx.graph);
      }
      route.oracle_assisted = true;
      route.tags = {"alspach-two-orbit"};
    } else {
      PermGroup hc = cross_orbit_coherence_subgroup(ctx, dq);
      push(report.trace, "coherence-subgroup", "order=" + std::to_string(hc.order()));
      if (!hc.is_trivial()) {
        route = fgl_route(ctx, hc, &dq, report.trace);
      } else {
        // Coherent already at the bottom: solve the derived quotient and
        // lift its cycle greedily as a closed walk.
        PermGroup induced = induced_block_action(ctx.group, dq);
        std::vector<int> bc =
            regular_abelian_cycle(dbq.graph, induced, std::nullopt, report.trace);
        std::vector<int> walk = bc;
        walk.push_back(bc.front());
        std::vector<int> lifted = lift_path(ctx.graph, dq, walk);
        const bool closed = lifted.front() == lifted.back();
        push(report.trace, "derived-quotient-lift", closed ? "closed" : "open");
        if (closed) {
          route.cycle = oracle_cycle_or_throw(ctx.graph);
          route.oracle_assisted = true;
          route.tags = {"alspach-closed-lift"};
        } else {
          if (!same_group(stabilizer(ctx.group, lifted.front()),
                          stabilizer(ctx.group, lifted.back())))
            throw InternalInconsistency("an open lift forces equal end stabilizers");
          push(report.trace, "stabilizer-equality", "ok");
          int mindeg = ctx.graph.vertex_count();
          for (const auto& block : dq.blocks) {
            const Graph& sub = induced_subgraph(ctx.graph, block).graph;
            for (int v = 0; v < sub.vertex_count(); ++v) mindeg = std::min(mindeg, sub.degree(v));
          }
          push(report.trace, "orbit-degree", "min=" + std::to_string(mindeg));
          if (mindeg >= 3) {
            route.cycle = oracle_cycle_or_throw(ctx.graph);
            route.oracle_assisted = true;
            route.tags = {"alspach-degree-three"};
          } else {
            // Degree two: each orbit ring is a single odd cycle and the
            // stabilizers are constant along it.
            for (const auto& block : dq.blocks) {
              const Graph& sub = induced_subgraph(ctx.graph, block).graph;
              if (!sub.is_regular() || sub.degree(0) != 2 || sub.vertex_count() % 2 == 0)
                throw InternalInconsistency("orbit rings of degree two must be single odd cycles");
              for (std::size_t i = 1; i < block.size(); ++i) {
                if (!same_group(stabilizer(ctx.group, block[0]),
                                stabilizer(ctx.group, block[i])))
                  throw InternalInconsistency("stabilizers must be uniform along an orbit ring");
              }
            }
            push(report.trace, "stabilizers-uniform-on-orbit", "ok");
            PermGroup h2 = minimal_normalizing_subgroup(ctx);
            push(report.trace, "minimal-product-normalizer",
                 "order=" + std::to_string(h2.order()));
            if (h2.is_trivial()) {
              if (stabilizer(ctx.group, 0).order() != 1)
                throw InternalInconsistency("a trivial normalizer certifies a regular action");
              push(report.trace, "keating-witte-cayley",
                   "n=" + std::to_string(ctx.graph.vertex_count()));
              route.cycle = oracle_cycle_or_throw(ctx.graph);
              route.oracle_assisted = true;
              route.tags = {"keating-witte"};
            } else {
              route = fgl_route(ctx, h2, nullptr, report.trace);
            }
          }
        }
      }
    }
  }

  if (!verify_certificate(graph, HamiltonCertificate{CertKind::cycle, route.cycle}))
    throw InternalInconsistency("the assembled cycle failed verification on the input graph");
  report.cycle = std::move(route.cycle);
  report.oracle_assisted = route.oracle_assisted;
  report.oracle_tags = std::move(route.tags);
  return report;
}

PathReport hamilton_path(const Graph& graph, const PermGroup& group) {
  PathReport report;
  validate_hypotheses(graph, group, &report.trace, false);
  const int n = graph.vertex_count();
  if (n == 1) {
    report.path = {0};
    return report;
  }
  if (n == 2) {
    report.path = {0, 1};
    return report;
  }

  HamiltonReport cycle_report = hamiltonize(graph, group);
  report.trace = std::move(cycle_report.trace);
  if (!cycle_report.petersen_exception) {
    report.path = std::move(cycle_report.cycle);
    report.oracle_assisted = cycle_report.oracle_assisted;
    report.oracle_tags = std::move(cycle_report.oracle_tags);
  } else {
    OracleResult r = find_hamilton_path(graph);
    if (r.status == OracleStatus::none_exists)
      throw InternalInconsistency("the exceptional graph still has hamilton paths");
    if (r.status == OracleStatus::budget_exceeded)
      throw std::runtime_error("exhaustive path search exceeded its budget");
    report.path = std::move(r.vertices);
    report.oracle_assisted = true;
    report.oracle_tags = {"petersen-path"};
  }
  if (!verify_certificate(graph, HamiltonCertificate{CertKind::path, report.path}))
    throw InternalInconsistency("the assembled path failed verification on the input graph");
  return report;
}

std::vector<LemmaCheck> verify_lemma_suite(const std::vector<const CatalogEntry*>& entries) {
  std::vector<LemmaCheck> out;
  for (const CatalogEntry* e : entries) {
    std::optional<TheoremContext> maybe;
    try {
      maybe = validate_hypotheses(e->graph, e->group, nullptr, true);
    } catch (const HypothesisViolation&) {
      continue;
    }
    const TheoremContext& ctx = *maybe;
    const int deg = ctx.group.degree();
    auto add = [&](std::string lemma, bool passed, std::string detail) {
      out.push_back(LemmaCheck{e->name, std::move(lemma), passed, std::move(detail)});
    };

    std::vector<std::vector<Permutation>> subs = all_subgroups(ctx.group);
    std::vector<PermGroup> normals;
    for (const auto& elems : subs) {
      PermGroup h(deg, elems);
      if (is_normal(ctx.group, h)) normals.push_back(std::move(h));
    }

    {
      // A normal subgroup fixing any point fixed everything, hence is trivial.
      bool ok = true;
      std::string detail = "ok";
      for (const auto& h : normals) {
        bool fixes_some = false;
        for (int v = 0; v < deg && !fixes_some; ++v) {
          bool all = true;
          for (const auto& p : h.elements()) {
            if (p(v) != v) {
              all = false;
              break;
            }
          }
          fixes_some = all;
        }
        if (fixes_some != h.is_trivial()) {
          ok = false;
          detail = "normal subgroup of order " + std::to_string(h.order());
          break;
        }
      }
      add("stabilizer-normality-equivalence", ok, detail);
    }
    {
      PermGroup core = normal_core(ctx.group, stabilizer(ctx.group, 0));
      add("stabilizer-core-trivial", core.is_trivial(),
          core.is_trivial() ? "ok" : "core order " + std::to_string(core.order()));
    }
    {
      bool ok = true;
      for (const auto& h : derived_chain(ctx))
        if (!is_normal(ctx.group, h)) ok = false;
      add("derived-chain-normal", ok, ok ? "ok" : "chain member not normal");
    }
    PermGroup frattini = frattini_subgroup(ctx.group);
    {
      if (ctx.structure.k == 0) {
        add("frattini-power-bound", true, "vacuous");
      } else {
        PermGroup dp = power_subgroup(ctx.derived, ctx.structure.p);
        add("frattini-power-bound", dp.is_subgroup_of(frattini),
            "power order " + std::to_string(dp.order()) + " frattini order " +
                std::to_string(frattini.order()));
      }
    }
    ReducedGraph red = g_minimal_reduce(e->graph, e->group);
    {
      bool ok = true;
      std::string detail = "ok";
      for (const auto& h : normals) {
        if (!h.is_subgroup_of(frattini)) continue;
        BlockQuotient bq = quotient_graph(red.graph, orbit_partition(h));
        if (std::find(bq.block_has_inner_edge.begin(), bq.block_has_inner_edge.end(), char(1)) !=
            bq.block_has_inner_edge.end()) {
          ok = false;
          detail = "edged orbit under subgroup of order " + std::to_string(h.order());
          break;
        }
      }
      add("frattini-orbit-edgeless", ok, detail);
    }
    {
      QuotientMap dq = orbit_partition(ctx.derived);
      BlockQuotient bq = quotient_graph(red.graph, dq);
      bool edged = std::find(bq.block_has_inner_edge.begin(), bq.block_has_inner_edge.end(),
                             char(1)) != bq.block_has_inner_edge.end();
      bool ok = true;
      std::string detail = "vacuous";
      if (edged) {
        detail = "edged, p=" + std::to_string(ctx.structure.p);
        if (ctx.structure.p % 2 == 0) ok = false;
        for (const auto& block : dq.blocks)
          if (!is_connected(induced_subgraph(red.graph, block).graph)) ok = false;
      }
      add("edged-orbit-structure", ok, detail);
    }
  }
  return out;
}

const std::vector<std::string>& allowed_oracle_tags() {
  static const std::vector<std::string> tags = {"keating-witte", "alspach-two-orbit",
                                                "alspach-closed-lift", "alspach-degree-three"};
  return tags;
}

}  // namespace hamlift
