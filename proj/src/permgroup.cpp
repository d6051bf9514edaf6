#include "hamlift/permgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <string>

namespace hamlift {
namespace {

long read_order_bound() {
  if (const char* s = std::getenv("HAMLIFT_MAX_GROUP_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && v > 0) return v;
  }
  return 100000;
}

void check_same_degree(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("group degree mismatch");
}

// Sorted-vector membership for deterministic element lists.
bool sorted_contains(const std::vector<Permutation>& v, const Permutation& p) {
  return std::binary_search(v.begin(), v.end(), p);
}

}  // namespace

long max_group_order() {
  static const long bound = read_order_bound();
  return bound;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  if (degree_ <= 0) throw std::invalid_argument("group degree must be positive");
  for (const auto& g : generators_)
    if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
  if (generators_.empty()) generators_.push_back(Permutation::identity(degree_));
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

const std::vector<Permutation>& PermGroup::elements() const {
  std::call_once(cache_->once, [this] {
    const long bound = max_group_order();
    std::set<Permutation> seen;
    std::deque<Permutation> queue;
    Permutation id = Permutation::identity(degree_);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
      Permutation cur = queue.front();
      queue.pop_front();
      for (const auto& g : generators_) {
        Permutation next = cur * g;
        if (seen.insert(next).second) {
          if (static_cast<long>(seen.size()) > bound)
            throw GroupTooLargeError("group too large: enumeration exceeds " +
                                     std::to_string(bound) + " elements");
          queue.push_back(next);
        }
      }
    }
    cache_->elements.assign(seen.begin(), seen.end());  // std::set is already sorted
  });
  return cache_->elements;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return sorted_contains(elements(), p);
}

bool PermGroup::is_trivial() const { return order() == 1; }

bool PermGroup::is_abelian() const {
  const auto& gs = generators_;
  for (std::size_t i = 0; i < gs.size(); ++i)
    for (std::size_t j = i + 1; j < gs.size(); ++j)
      if (!(gs[i] * gs[j] == gs[j] * gs[i])) return false;
  return true;
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree()) return false;
  for (const auto& x : generators_)
    if (!g.contains(x)) return false;
  return true;
}

bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.elements() == b.elements();
}

std::vector<int> orbit(const PermGroup& g, int x) {
  if (x < 0 || x >= g.degree()) throw std::invalid_argument("orbit point out of range");
  std::vector<char> seen(static_cast<std::size_t>(g.degree()), 0);
  std::deque<int> queue{x};
  seen[static_cast<std::size_t>(x)] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const auto& gen : g.generators()) {
      int w = gen(v);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> out;
  for (int v = 0; v < g.degree(); ++v)
    if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

QuotientMap orbit_partition(const PermGroup& g) {
  std::vector<int> assign(static_cast<std::size_t>(g.degree()), -1);
  int next = 0;
  for (int v = 0; v < g.degree(); ++v) {
    if (assign[static_cast<std::size_t>(v)] != -1) continue;
    for (int w : orbit(g, v)) assign[static_cast<std::size_t>(w)] = next;
    ++next;
  }
  return QuotientMap::from_assignment(assign);
}

PermGroup stabilizer(const PermGroup& g, int x) {
  if (x < 0 || x >= g.degree()) throw std::invalid_argument("stabilizer point out of range");
  // Orbit with a transversal: rep[v] maps x to v.
  std::map<int, Permutation> rep;
  rep.emplace(x, Permutation::identity(g.degree()));
  std::deque<int> queue{x};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (const auto& gen : g.generators()) {
      int w = gen(v);
      if (!rep.count(w)) {
        rep.emplace(w, gen * rep.at(v));
        queue.push_back(w);
      }
    }
  }
  std::set<Permutation> schreier;
  for (const auto& [v, uv] : rep) {
    for (const auto& gen : g.generators()) {
      Permutation s = rep.at(gen(v)).inverse() * gen * uv;
      if (!s.is_identity()) schreier.insert(s);
    }
  }
  PermGroup stab(g.degree(), std::vector<Permutation>(schreier.begin(), schreier.end()));
  if (static_cast<long>(rep.size()) * stab.order() != g.order())
    throw std::logic_error("orbit-stabilizer identity violated");
  return stab;
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  check_same_degree(g, h);
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("is_normal: h is not a subgroup of g");
  for (const auto& c : g.generators())
    for (const auto& s : h.generators())
      if (!h.contains(conjugate(c, s))) return false;
  return true;
}

PermGroup normal_closure(const PermGroup& g, const PermGroup& h) {
  check_same_degree(g, h);
  if (!h.is_subgroup_of(g))
    throw std::invalid_argument("normal_closure: h is not a subgroup of g");
  std::vector<Permutation> gens;
  for (const auto& x : h.generators())
    if (!x.is_identity()) gens.push_back(x);
  if (gens.empty()) return PermGroup::trivial(g.degree());
  for (bool grew = true; grew;) {
    grew = false;
    PermGroup current(g.degree(), gens);
    std::vector<Permutation> fresh;
    for (const auto& s : gens)
      for (const auto& c : g.generators()) {
        Permutation conj = conjugate(c, s);
        if (!current.contains(conj)) fresh.push_back(conj);
      }
    if (!fresh.empty()) {
      gens.insert(gens.end(), fresh.begin(), fresh.end());
      grew = true;
    }
  }
  return PermGroup(g.degree(), gens);
}

PermGroup commutator_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gs = g.generators();
  for (const auto& a : gs)
    for (const auto& b : gs) {
      Permutation c = commutator(a, b);
      if (!c.is_identity()) comms.push_back(c);
    }
  PermGroup derived = normal_closure(g, PermGroup(g.degree(), comms));
  // G/G' abelian: every generator commutator must land in the result.
  for (const auto& a : gs)
    for (const auto& b : gs)
      if (!derived.contains(commutator(a, b)))
        throw std::logic_error("commutator subgroup misses a generator commutator");
  return derived;
}

std::optional<CyclicPrimePower> cyclic_prime_power_structure(const PermGroup& h) {
  long n = h.order();
  if (n == 1) return CyclicPrimePower{0, 0, Permutation::identity(h.degree())};
  long p = 0;
  long rest = n;
  for (long d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = rest;  // n itself prime
  int k = 0;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return std::nullopt;  // not a prime power
  for (const auto& e : h.elements())
    if (e.order() == n) return CyclicPrimePower{p, k, e};
  return std::nullopt;  // prime-power order but not cyclic
}

PermGroup power_subgroup(const PermGroup& h, long p) {
  if (p <= 0) throw std::invalid_argument("power_subgroup: p must be positive");
  std::set<Permutation> gens;
  for (const auto& e : h.elements()) {
    Permutation ep = e.power(p);
    if (!ep.is_identity()) gens.insert(ep);
  }
  return PermGroup(h.degree(), std::vector<Permutation>(gens.begin(), gens.end()));
}

std::vector<std::vector<Permutation>> all_subgroups(const PermGroup& g) {
  const long n = g.order();
  if (n > 512) throw GroupTooLargeError("subgroup lattice enumeration is desk scale only");
  const auto& elems = g.elements();
  auto index_of = [&](const Permutation& p) {
    return static_cast<int>(std::lower_bound(elems.begin(), elems.end(), p) - elems.begin());
  };
  // Multiplication table over element indices.
  std::vector<std::vector<int>> mul(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      mul[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          index_of(elems[static_cast<std::size_t>(i)] * elems[static_cast<std::size_t>(j)]);

  auto closure = [&](std::vector<int> seed) {
    std::set<int> seen(seed.begin(), seed.end());
    seen.insert(index_of(Permutation::identity(g.degree())));
    std::deque<int> queue(seen.begin(), seen.end());
    std::vector<int> gens(seen.begin(), seen.end());
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (int b : gens)
        for (int c : {mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)],
                      mul[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]})
          if (seen.insert(c).second) queue.push_back(c);
    }
    // A subset closed under multiplication is a subgroup (finite).
    std::vector<int> out(seen.begin(), seen.end());
    return out;
  };

  std::set<std::vector<int>> subgroups;
  subgroups.insert(closure({}));
  for (long i = 0; i < n; ++i) subgroups.insert(closure({static_cast<int>(i)}));
  // Join closure: combine pairs until stable.
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::vector<int>> snapshot(subgroups.begin(), subgroups.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        std::vector<int> seed = snapshot[i];
        seed.insert(seed.end(), snapshot[j].begin(), snapshot[j].end());
        if (subgroups.insert(closure(std::move(seed))).second) grew = true;
      }
  }
  std::vector<std::vector<Permutation>> out;
  for (const auto& sub : subgroups) {
    std::vector<Permutation> members;
    members.reserve(sub.size());
    for (int i : sub) members.push_back(elems[static_cast<std::size_t>(i)]);
    out.push_back(std::move(members));
  }
  return out;
}

PermGroup frattini_subgroup(const PermGroup& g) {
  auto subs = all_subgroups(g);
  const long n = g.order();
  std::vector<const std::vector<Permutation>*> proper;
  for (const auto& s : subs)
    if (static_cast<long>(s.size()) < n) proper.push_back(&s);
  if (proper.empty()) return PermGroup::trivial(g.degree());
  std::vector<const std::vector<Permutation>*> maximal;
  for (const auto* a : proper) {
    bool covered = false;
    for (const auto* b : proper) {
      if (a == b || b->size() <= a->size()) continue;
      if (std::includes(b->begin(), b->end(), a->begin(), a->end())) {
        covered = true;
        break;
      }
    }
    if (!covered) maximal.push_back(a);
  }
  std::vector<Permutation> inter = *maximal.front();
  for (std::size_t i = 1; i < maximal.size() && inter.size() > 1; ++i) {
    std::vector<Permutation> next;
    std::set_intersection(inter.begin(), inter.end(), maximal[i]->begin(), maximal[i]->end(),
                          std::back_inserter(next));
    inter = std::move(next);
  }
  std::vector<Permutation> gens;
  for (const auto& x : inter)
    if (!x.is_identity()) gens.push_back(x);
  return PermGroup(g.degree(), gens);
}

std::vector<PermGroup> cyclic_subgroup_chain(const PermGroup& h, long p) {
  auto s = cyclic_prime_power_structure(h);
  if (!s) throw std::invalid_argument("cyclic_subgroup_chain: not cyclic of prime-power order");
  if (s->k > 0 && s->p != p)
    throw std::invalid_argument("cyclic_subgroup_chain: prime does not divide the group order");
  std::vector<PermGroup> chain;
  // Ascending: H_i = <gen^(p^(k-i))> has order p^i.
  for (int i = 0; i <= s->k; ++i) {
    long exp = 1;
    for (int j = 0; j < s->k - i; ++j) exp *= p;
    Permutation gen = s->generator.power(exp);
    PermGroup sub =
        gen.is_identity() ? PermGroup::trivial(h.degree()) : PermGroup(h.degree(), {gen});
    long expect = 1;
    for (int j = 0; j < i; ++j) expect *= p;
    if (sub.order() != expect) throw std::logic_error("chain subgroup has unexpected order");
    chain.push_back(std::move(sub));
  }
  return chain;
}

PermGroup product_subgroup(const PermGroup& a, const PermGroup& b, const PermGroup& ambient) {
  check_same_degree(a, ambient);
  check_same_degree(b, ambient);
  if (!a.is_subgroup_of(ambient) || !b.is_subgroup_of(ambient))
    throw std::invalid_argument("product_subgroup: factors must lie in the ambient group");
  std::set<Permutation> prod;
  for (const auto& x : a.elements())
    for (const auto& y : b.elements()) prod.insert(x * y);
  std::vector<Permutation> inter;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(inter));
  if (static_cast<long>(prod.size()) * static_cast<long>(inter.size()) != a.order() * b.order())
    throw std::logic_error("product set size violates |A||B|/|A \\cap B|");
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  PermGroup span(ambient.degree(), std::move(gens));
  if (span.order() != static_cast<long>(prod.size()))
    throw std::invalid_argument(
        "product is not a subgroup (left factor not normal in the ambient group)");
  return span;
}

PermGroup normal_core(const PermGroup& g, const PermGroup& h) {
  check_same_degree(g, h);
  if (!h.is_subgroup_of(g)) throw std::invalid_argument("normal_core: h is not a subgroup of g");
  // Elements of h whose whole g-conjugacy class stays inside h.
  std::set<Permutation> core(h.elements().begin(), h.elements().end());
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (auto it = core.begin(); it != core.end();) {
      bool stays = true;
      for (const auto& c : g.generators())
        if (!core.count(conjugate(c, *it))) {
          stays = false;
          break;
        }
      if (!stays) {
        it = core.erase(it);
        shrunk = true;
      } else {
        ++it;
      }
    }
  }
  std::vector<Permutation> gens;
  for (const auto& x : core)
    if (!x.is_identity()) gens.push_back(x);
  return PermGroup(g.degree(), gens);
}

}  // namespace hamlift
