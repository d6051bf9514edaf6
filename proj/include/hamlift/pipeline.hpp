#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hamlift/catalog.hpp"
#include "hamlift/graph.hpp"
#include "hamlift/permgroup.hpp"
#include "hamlift/quotient.hpp"

namespace hamlift {

/// An input failed one of the structural requirements. `anchor()` names the
/// failed check with the same identifier the trace uses.
class HypothesisViolation : public std::runtime_error {
 public:
  HypothesisViolation(std::string anchor, const std::string& message)
      : std::runtime_error(message), anchor_(std::move(anchor)) {}
  const std::string& anchor() const noexcept { return anchor_; }

 private:
  std::string anchor_;
};

/// The solver reached a state the structure theory rules out. Always a bug in
/// this library (or a corrupted input), never a property of a valid input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One step of the decomposition record. Anchors are stable kebab-case
/// identifiers; the verdict carries the step-specific outcome.
struct TraceStep {
  int number;  // 1-based position within the run
  std::string anchor;
  std::string verdict;
};

/// A graph together with its validated acting group data.
struct TheoremContext {
  Graph graph;
  PermGroup group;
  PermGroup derived;           // commutator subgroup of `group`
  CyclicPrimePower structure;  // derived is cyclic of order p^k
};

/// Checks the input requirements in order: connectivity, minimum order,
/// automorphism action, transitivity, cyclic prime-power commutator
/// subgroup. Appends one trace step per passed check and throws
/// HypothesisViolation at the first failure. `enforce_size` false drops the
/// three-vertex floor (path mode accepts smaller graphs).
TheoremContext validate_hypotheses(const Graph& graph, const PermGroup& group,
                                   std::vector<TraceStep>* trace = nullptr,
                                   bool enforce_size = true);

/// Smallest member H of the derived chain for which H * stab(0) is a normal
/// subgroup of the full group. The top member always qualifies, so this never
/// fails on a validated context. A trivial result certifies a regular action.
PermGroup minimal_normalizing_subgroup(const TheoremContext& ctx);

/// Smallest member H of the derived chain with H * stab(x) = H * stab(y) for
/// every edge of ctx.graph whose ends lie in different blocks of `orbits`.
/// The top member always qualifies.
PermGroup cross_orbit_coherence_subgroup(const TheoremContext& ctx, const QuotientMap& orbits);

/// Hamilton cycle of a block quotient, forced through a prescribed edge.
struct QuotientCycleResult {
  std::vector<int> cycle;  // block ids, each exactly once; the requested edge
                           // is cyclically adjacent somewhere along it
  bool oracle_assisted = false;
  std::vector<std::string> oracle_tags;
};

/// Hamilton cycle of the block graph of the h-orbits through `block_edge`.
/// h must either equal the derived subgroup (the quotient action is abelian
/// and the solver handles the edge directly) or be a proper derived-chain
/// member (the quotient is solved recursively and a group translate of the
/// resulting cycle is matched onto the edge; minimality of the quotient
/// guarantees such a translate). Appends its steps to `trace`.
QuotientCycleResult edge_hamilton_cycle_quotient(const TheoremContext& ctx, const PermGroup& h,
                                                 std::pair<int, int> block_edge,
                                                 std::vector<TraceStep>& trace);

struct HamiltonReport {
  bool petersen_exception = false;
  std::vector<int> cycle;  // empty iff petersen_exception
  bool oracle_assisted = false;
  std::vector<std::string> oracle_tags;  // subset of allowed_oracle_tags()
  std::vector<TraceStep> trace;
};

/// Runs the decomposition end to end: validation, invariant edge reduction,
/// then one of the structural branches. The returned cycle is verified
/// against the input graph before this returns; the one graph with no cycle
/// is reported through `petersen_exception` (confirmed by exhaustive search).
HamiltonReport hamiltonize(const Graph& graph, const PermGroup& group);

struct PathReport {
  std::vector<int> path;
  bool oracle_assisted = false;
  std::vector<std::string> oracle_tags;
  std::vector<TraceStep> trace;
};

/// Hamilton path: reads the cycle as a path, handles one- and two-vertex
/// graphs directly, and falls back to exhaustive search on the exceptional
/// graph (which has hamilton paths, just no cycle).
PathReport hamilton_path(const Graph& graph, const PermGroup& group);

struct LemmaCheck {
  std::string entry;
  std::string lemma;
  bool passed = false;
  std::string detail;
};

/// Cross-checks the structural facts the decomposition relies on, for every
/// entry that passes validation (six checks per entry).
std::vector<LemmaCheck> verify_lemma_suite(const std::vector<const CatalogEntry*>& entries);

/// The quotient families where the construction hands a finite case to the
/// exhaustive search; every cycle report's oracle tags stay inside this set.
const std::vector<std::string>& allowed_oracle_tags();

}  // namespace hamlift
