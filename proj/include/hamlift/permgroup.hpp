#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hamlift/permutation.hpp"
#include "hamlift/quotient.hpp"

namespace hamlift {

/// Thrown when group enumeration would exceed the configured element bound.
struct GroupTooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Element bound for full enumeration; default 100000, overridable through the
/// HAMLIFT_MAX_GROUP_ORDER environment variable (read once per process).
long max_group_order();

/// A permutation group given by generators. Values are immutable; the element
/// list is enumerated lazily and shared between copies. The lazy cache is
/// guarded so concurrent readers observe it either absent or fully built.
class PermGroup {
 public:
  /// An empty generator list yields the trivial group.
  PermGroup(int degree, std::vector<Permutation> generators);

  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// All elements, sorted lexicographically by image table (deterministic).
  /// Throws GroupTooLargeError past the enumeration bound.
  const std::vector<Permutation>& elements() const;
  long order() const { return static_cast<long>(elements().size()); }

  bool contains(const Permutation& p) const;
  bool is_trivial() const;
  bool is_abelian() const;  // all generator pairs commute
  bool is_subgroup_of(const PermGroup& g) const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Permutation> elements;
  };

  int degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Equal element sets (same subgroup of the same symmetric group).
bool same_group(const PermGroup& a, const PermGroup& b);

/// Orbit of x under g, ascending. Uses generator closure only.
std::vector<int> orbit(const PermGroup& g, int x);

/// Orbit partition of {0..degree-1}; blocks ordered by smallest member.
QuotientMap orbit_partition(const PermGroup& g);

/// Point stabilizer of x, generated by Schreier generators.
/// The orbit-stabilizer identity |g| = |orbit|*|stabilizer| is checked.
PermGroup stabilizer(const PermGroup& g, int x);

/// True when every g-generator conjugate of every h-generator stays in h.
/// Requires h to be a subgroup of g.
bool is_normal(const PermGroup& g, const PermGroup& h);

/// Smallest normal subgroup of g containing h. Requires h subgroup of g.
PermGroup normal_closure(const PermGroup& g, const PermGroup& h);

/// Commutator subgroup: normal closure of generator commutators.
/// The quotient by the result is abelian (checked on generators).
PermGroup commutator_subgroup(const PermGroup& g);

struct CyclicPrimePower {
  long p;  // 0 for the trivial group
  int k;   // |group| = p^k; k = 0 sentinel for the trivial group
  Permutation generator;
};

/// If h is cyclic of prime-power order p^k returns (p, k, generator); the
/// trivial group yields the k = 0 sentinel with identity generator. Otherwise
/// nullopt.
std::optional<CyclicPrimePower> cyclic_prime_power_structure(const PermGroup& h);

/// Subgroup generated by the p-th powers of all elements of h.
PermGroup power_subgroup(const PermGroup& h, long p);

/// Frattini subgroup: intersection of all maximal subgroups (the whole
/// subgroup lattice is enumerated; desk scale only). A group with no proper
/// subgroup yields the trivial group.
PermGroup frattini_subgroup(const PermGroup& g);

/// All subgroups of g as sorted element lists (join closure of the cyclic
/// subgroups; desk scale only, guarded by an order cap).
std::vector<std::vector<Permutation>> all_subgroups(const PermGroup& g);

/// For h cyclic of order p^k: the full chain {e} = H_0 < H_1 < ... < H_k = h.
/// Throws std::invalid_argument unless h is cyclic of p-power order.
std::vector<PermGroup> cyclic_subgroup_chain(const PermGroup& h, long p);

/// The set product {x*y : x in a, y in b} as a subgroup of `ambient`; valid
/// when a is normal in ambient. Throws std::invalid_argument ("product is not
/// a subgroup") when the product set fails to be closed.
PermGroup product_subgroup(const PermGroup& a, const PermGroup& b, const PermGroup& ambient);

/// Largest normal subgroup of g contained in the subgroup h.
PermGroup normal_core(const PermGroup& g, const PermGroup& h);

}  // namespace hamlift
