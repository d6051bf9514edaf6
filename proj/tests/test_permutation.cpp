#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "hamlift/permutation.hpp"

using namespace hamlift;

namespace {
Permutation cycle3() { return Permutation({1, 2, 0}); }
Permutation swap01() { return Permutation({1, 0, 2}); }
}  // namespace

TEST_CASE("constructor accepts only bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({-1, 0, 1}), std::invalid_argument);
  CHECK_NOTHROW(Permutation({2, 0, 1}));
}

TEST_CASE("identity basics") {
  Permutation e = Permutation::identity(4);
  CHECK(e.degree() == 4);
  CHECK(e.is_identity());
  CHECK(e(2) == 2);
  CHECK_FALSE(cycle3().is_identity());
}

TEST_CASE("composition applies the right factor first") {
  Permutation a = cycle3();
  Permutation b = swap01();
  // (a*b)(0) = a(b(0)) = a(1) = 2
  CHECK((a * b)(0) == 2);
  CHECK((b * a)(0) == 0);
  CHECK((a * a.inverse()).is_identity());
}

TEST_CASE("inverse, power and order") {
  Permutation a = cycle3();
  CHECK(a.inverse()(1) == 0);
  CHECK(a.order() == 3);
  CHECK(a.power(0).is_identity());
  CHECK(a.power(3).is_identity());
  CHECK(a.power(4) == a);
  CHECK(swap01().order() == 2);
  CHECK(Permutation::identity(5).order() == 1);
}

TEST_CASE("conjugate and commutator") {
  Permutation a = cycle3();
  Permutation b = swap01();
  CHECK(conjugate(b, a) == b * a * b.inverse());
  CHECK(commutator(a, b) == a.inverse() * b.inverse() * a * b);
  CHECK(commutator(a, a.power(2)).is_identity());
}

TEST_CASE("ordering is lexicographic on image tables") {
  Permutation e = Permutation::identity(3);
  CHECK(e < swap01());
  CHECK(swap01() < Permutation({2, 0, 1}));
  CHECK(e == Permutation({0, 1, 2}));
}
