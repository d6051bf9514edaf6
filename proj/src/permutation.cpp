#include "hamlift/permutation.hpp"

#include <stdexcept>
#include <string>

namespace hamlift {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation of degree 0");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree())
      throw std::invalid_argument("image " + std::to_string(v) + " out of range");
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("image table is not a bijection");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> im(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) im[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i)
    im[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(im));
}

long Permutation::order() const {
  Permutation acc = *this;
  long m = 1;
  while (!acc.is_identity()) {
    acc = acc * *this;
    ++m;
  }
  return m;
}

Permutation Permutation::power(long e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Permutation acc = Permutation::identity(degree());
  Permutation base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in composition");
  std::vector<int> im(static_cast<std::size_t>(a.degree()));
  for (int v = 0; v < a.degree(); ++v) im[static_cast<std::size_t>(v)] = a(b(v));
  return Permutation(std::move(im));
}

Permutation conjugate(const Permutation& g, const Permutation& h) { return g * h * g.inverse(); }

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

}  // namespace hamlift
