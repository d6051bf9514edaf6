#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace hamlift {

/// A permutation of {0, ..., degree-1}, stored as its image table.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `images` is a bijection on its index range.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int v) const { return images_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Multiplicative order: smallest m >= 1 with p^m = identity.
  long order() const;

  /// p^e for e >= 0.
  Permutation power(long e) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on image tables; the deterministic order used everywhere.
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

/// Composition acting left-to-right on points: (a*b)(v) = a(b(v)).
Permutation operator*(const Permutation& a, const Permutation& b);

/// Conjugate g*h*g^{-1}.
Permutation conjugate(const Permutation& g, const Permutation& h);

/// Commutator a^{-1} b^{-1} a b.
Permutation commutator(const Permutation& a, const Permutation& b);

}  // namespace hamlift
