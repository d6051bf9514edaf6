#pragma once

#include <vector>

#include "hamlift/graph.hpp"
#include "hamlift/permgroup.hpp"
#include "hamlift/quotient.hpp"

namespace hamlift {

enum class CertKind { cycle, path };

/// A claimed hamilton cycle or path, stored as the vertex sequence. A cycle
/// lists each vertex once; the closing edge back to the front is implicit.
struct HamiltonCertificate {
  CertKind kind;
  std::vector<int> vertices;
};

/// Pure check against the graph: every vertex exactly once, consecutive
/// vertices adjacent, and for cycles (at least 3 vertices) the closing edge
/// present.
bool verify_certificate(const Graph& g, const HamiltonCertificate& cert);

std::vector<int> apply_perm_to_path(const Permutation& p, const std::vector<int>& path);

/// Lifts a block path to a vertex path visiting one vertex per listed block,
/// always stepping to the smallest admissible vertex. The block path must be
/// a sequence of pairwise distinct blocks, except that the last block may
/// equal the first (a closed walk); `start` fixes the first vertex (default:
/// smallest member of the first block). Throws std::runtime_error when a step
/// has no neighbour in the next block; that cannot happen when the blocks are
/// the orbits of a group of automorphisms.
std::vector<int> lift_path(const Graph& g, const QuotientMap& q,
                           const std::vector<int>& block_path, int start = -1);

/// Assembles a hamilton cycle from a path whose ends lie in the same h-orbit,
/// h cyclic of prime-power order p^k acting semiregularly. Requirements, each
/// with its own error: the path is a path of g; the end lies in the h-orbit
/// of the front but outside the orbit of the p-th power subgroup; collapsing
/// the path to blocks yields a hamilton cycle of the block graph (a single
/// block, the two-block walk B A B, or a closed walk through every block
/// once). With gamma the element moving front to end, the result is the
/// concatenation of gamma^i(path without its end) for i = 0 .. |h|-1, and is
/// verified before being returned.
HamiltonCertificate factor_group_cycle(const Graph& g, const PermGroup& h,
                                       const std::vector<int>& path);

}  // namespace hamlift
