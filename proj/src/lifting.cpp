#include "hamlift/lifting.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hamlift/action.hpp"

namespace hamlift {

bool verify_certificate(const Graph& g, const HamiltonCertificate& cert) {
  const auto& seq = cert.vertices;
  if (static_cast<int>(seq.size()) != g.vertex_count()) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : seq) {
    if (v < 0 || v >= g.vertex_count() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!g.has_edge(seq[i], seq[i + 1])) return false;
  if (cert.kind == CertKind::cycle)
    return seq.size() >= 3 && g.has_edge(seq.back(), seq.front());
  return true;
}

std::vector<int> apply_perm_to_path(const Permutation& p, const std::vector<int>& path) {
  std::vector<int> out;
  out.reserve(path.size());
  for (int v : path) out.push_back(p(v));
  return out;
}

std::vector<int> lift_path(const Graph& g, const QuotientMap& q,
                           const std::vector<int>& block_path, int start) {
  if (q.vertex_count() != g.vertex_count())
    throw std::invalid_argument("partition does not match the vertex set");
  if (block_path.empty()) throw std::invalid_argument("empty block path");
  for (int b : block_path)
    if (b < 0 || b >= q.block_count()) throw std::invalid_argument("block id out of range");
  {
    std::set<int> interior(block_path.begin(), block_path.end());
    bool closed = block_path.size() >= 2 && block_path.front() == block_path.back();
    std::size_t expected = closed ? block_path.size() - 1 : block_path.size();
    if (interior.size() != expected)
      throw std::invalid_argument("block path revisits a block");
  }
  const auto& first_block = q.blocks[static_cast<std::size_t>(block_path.front())];
  if (start == -1) {
    start = first_block.front();
  } else if (start < 0 || start >= g.vertex_count() ||
             q.block_of[static_cast<std::size_t>(start)] != block_path.front()) {
    throw std::invalid_argument("start vertex is not in the first block");
  }
  std::vector<int> out{start};
  int cur = start;
  for (std::size_t i = 1; i < block_path.size(); ++i) {
    const auto& block = q.blocks[static_cast<std::size_t>(block_path[i])];
    int next = -1;
    for (int w : block)
      if (g.has_edge(cur, w)) {
        next = w;
        break;
      }
    if (next == -1)
      throw std::runtime_error("lift blocked: no neighbour of the current vertex in the next block");
    out.push_back(next);
    cur = next;
  }
  return out;
}

HamiltonCertificate factor_group_cycle(const Graph& g, const PermGroup& h,
                                       const std::vector<int>& path) {
  auto s = cyclic_prime_power_structure(h);
  if (!s || s->p == 0)
    throw std::invalid_argument("subgroup must be nontrivial cyclic of prime-power order");
  require_automorphism_action(g, h);
  if (path.size() < 2) throw std::invalid_argument("not a path in the graph");
  {
    std::set<int> distinct(path.begin(), path.end());
    if (distinct.size() != path.size()) throw std::invalid_argument("not a path in the graph");
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.has_edge(path[i], path[i + 1])) throw std::invalid_argument("not a path in the graph");

  const int front = path.front();
  const int end = path.back();
  auto horbit = orbit(h, front);
  if (!std::binary_search(horbit.begin(), horbit.end(), end))
    throw std::invalid_argument("path ends in a different orbit of the subgroup");
  auto porbit = orbit(power_subgroup(h, s->p), front);
  if (std::binary_search(porbit.begin(), porbit.end(), end))
    throw std::invalid_argument("path end lies in the p-th power subgroup orbit of the front");

  QuotientMap blocks = orbit_partition(h);
  const std::size_t m = path.size() - 1;  // body length; the end repeats block 0
  {
    std::set<int> covered;
    for (std::size_t i = 0; i < m; ++i)
      covered.insert(blocks.block_of[static_cast<std::size_t>(path[i])]);
    bool ok = covered.size() == m && static_cast<int>(m) == blocks.block_count();
    if (ok && m >= 2) {
      // The closed block walk must return to the front's block.
      ok = blocks.block_of[static_cast<std::size_t>(end)] ==
           blocks.block_of[static_cast<std::size_t>(front)];
    }
    if (!ok)
      throw std::invalid_argument("path does not collapse to a hamilton cycle of the block graph");
  }

  Permutation gamma = Permutation::identity(h.degree());
  bool found = false;
  for (const auto& e : h.elements())
    if (e(front) == end) {
      gamma = e;
      found = true;
      break;
    }
  if (!found) throw std::logic_error("orbit membership without a moving element");

  std::vector<int> body(path.begin(), path.end() - 1);
  std::vector<int> cycle;
  cycle.reserve(body.size() * static_cast<std::size_t>(h.order()));
  std::vector<int> seg = body;
  for (long i = 0; i < h.order(); ++i) {
    cycle.insert(cycle.end(), seg.begin(), seg.end());
    seg = apply_perm_to_path(gamma, seg);
  }
  HamiltonCertificate cert{CertKind::cycle, std::move(cycle)};
  if (!verify_certificate(g, cert))
    throw std::invalid_argument(
        "assembled walk is not a hamilton cycle: the subgroup does not act semiregularly");
  return cert;
}

}  // namespace hamlift
