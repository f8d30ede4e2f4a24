#include <doctest.h>

#include <map>

#include "weightsum/charsum.hpp"
#include "weightsum/config.hpp"
#include "weightsum/constructions.hpp"
#include "weightsum/modular.hpp"

using namespace weightsum;

namespace {

// Abelian isomorphism type via solution counts of x^m = e, which determine
// a finite abelian group.
bool matches_invariant_factors(const GroupTable& table, const std::vector<std::uint64_t>& d) {
  std::uint64_t exponent = d.back();
  for (std::uint64_t m = 1; m <= exponent; ++m) {
    if (exponent % m != 0) continue;
    std::size_t solutions = 0;
    for (std::size_t x = 0; x < table.size(); ++x) {
      std::size_t acc = 0;
      for (std::uint64_t t = 0; t < m; ++t) acc = table.mul(acc, x);
      if (acc == 0) ++solutions;
    }
    std::uint64_t expected = 1;
    for (auto di : d) expected *= std::gcd(m, di);
    if (solutions != expected) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Lie algebra construction") {
  // p = 2, n = 1, k = 1: Pi = {eps, gamma}, Sigma = gamma(h) = a
  auto f4 = Field::make(FieldSpec::prime_ext(2, {1, 1, 1}));
  FieldElement a = f4->ext_generator();
  ConstructionResult r1 = construct_lie(1, 1, a);
  CHECK(r1.group.order() == 2);
  CHECK(r1.achieved == a);

  // p = 3, n = 2, k = 1: Sigma = (-1)(-r) = r via phi(2,1) = -1
  auto f3 = Field::make(FieldSpec::prime(3));
  for (long long v = 0; v < 3; ++v) {
    ConstructionResult r = construct_lie(2, 1, f3->from_integer(v));
    CHECK(r.achieved == f3->from_integer(v));
    CHECK(r.group.order() == 3);
  }

  // p = 2, n = 3, k = 2
  ConstructionResult r2 = construct_lie(3, 2, f4->one() + f4->ext_generator());
  CHECK(r2.group.order() == 4);
  CHECK(r2.achieved == r2.target);

  // p = 5, n = 4, k = 1
  auto f25 = Field::make(FieldSpec::prime(5));
  ConstructionResult r3 = construct_lie(4, 1, f25->from_integer(3));
  CHECK(r3.achieved == f25->from_integer(3));

  // shape errors
  CHECK_THROWS_WITH_AS(construct_lie(3, 2, f3->one()), doctest::Contains("BadShape"), Error);
  CHECK_THROWS_WITH_AS(construct_lie(1, 1, f4->zero()),
                       doctest::Contains("ZeroTargetDisallowed"), Error);
  auto q = Field::make(FieldSpec::rational());
  CHECK_THROWS_WITH_AS(construct_lie(2, 1, q->one()),
                       doctest::Contains("WrongCharacteristic"), Error);
}

TEST_CASE("cyclic construction") {
  auto q4 = Field::make(FieldSpec::cyclotomic(4));
  // m = 2, n = 1: a_1 = r
  ConstructionResult r = construct_cyclic(2, 1, q4->from_integer(7));
  CHECK(r.group.order() == 2);
  CHECK(r.achieved == q4->from_integer(7));
  CHECK(r.group.elements[1].value("h1") == q4->from_integer(7));

  // m = 2, n = 3: s = C(3,0) + C(3,2) = 4
  CHECK(binomial_skip_sum(3, 2) == 4);
  ConstructionResult r3 = construct_cyclic(2, 3, q4->from_integer(-5));
  CHECK(r3.achieved == q4->from_integer(-5));

  // m = 4 over Q(zeta_4), a zero target, and a root-of-unity target
  CHECK(construct_cyclic(4, 2, q4->zero()).achieved.is_zero());
  CHECK(construct_cyclic(4, 3, q4->zeta()).achieved == q4->zeta());

  // characteristic p > 2^n works too
  auto f101 = Field::make(FieldSpec::prime(101));
  ConstructionResult rp = construct_cyclic(4, 3, f101->from_integer(55));
  CHECK(rp.achieved == f101->from_integer(55));
  CHECK(rp.group.order() == 4);

  CHECK_THROWS_WITH_AS(construct_cyclic(4, 1, Field::make(FieldSpec::rational())->one()),
                       doctest::Contains("NoSuchRoot"), Error);
  CHECK_THROWS_WITH_AS(construct_cyclic(2, 3, Field::make(FieldSpec::prime(5))->one()),
                       doctest::Contains("CharTooSmall"), Error);
  CHECK_THROWS_WITH_AS(construct_cyclic(3, 2, q4->one()), doctest::Contains("InvalidSpec"),
                       Error);
}

TEST_CASE("abelian construction") {
  auto q4 = Field::make(FieldSpec::cyclotomic(4));
  auto q8 = Field::make(FieldSpec::cyclotomic(8));

  // k = 1 = n: reduces to the order-2 example
  ConstructionResult r1 = construct_abelian({2}, 1, q4->from_integer(9));
  CHECK(r1.group.order() == 2);
  CHECK(r1.achieved == q4->from_integer(9));
  CHECK(matches_invariant_factors(r1.group.table, {2}));

  // Z/2 x Z/4 with n = 1 < k = 2: the mixed (free grouplike block) case
  ConstructionResult r2 = construct_abelian({2, 4}, 1, q4->from_integer(-3));
  CHECK(r2.group.order() == 8);
  CHECK(r2.achieved == q4->from_integer(-3));
  CHECK(matches_invariant_factors(r2.group.table, {2, 4}));

  // Z/2 x Z/2 with n = 2 = k: the repeated-letter case with S = {emptyset}
  ConstructionResult r3 = construct_abelian({2, 2}, 2, q4->from_integer(11));
  CHECK(r3.group.order() == 4);
  CHECK(r3.achieved == q4->from_integer(11));
  CHECK(matches_invariant_factors(r3.group.table, {2, 2}));

  // n > k with a repeated letter
  ConstructionResult r4 = construct_abelian({2, 4}, 3, q8->from_integer(6));
  CHECK(r4.group.order() == 8);
  CHECK(r4.achieved == q8->from_integer(6));
  CHECK(matches_invariant_factors(r4.group.table, {2, 4}));

  // zero targets are fine
  CHECK(construct_abelian({2, 2}, 2, q4->zero()).achieved.is_zero());

  // error surfaces
  CHECK_THROWS_WITH_AS(construct_abelian({4, 2}, 1, q4->one()), doctest::Contains("BadChain"),
                       Error);
  CHECK_THROWS_WITH_AS(construct_abelian({3}, 1, q4->one()), doctest::Contains("BadChain"),
                       Error);  // odd exponent in the repeated-letter case
  CHECK_THROWS_WITH_AS(construct_abelian({2}, 3, q4->one()), doctest::Contains("BadShape"),
                       Error);  // k = 1 < n: no linear coefficient
  CHECK_THROWS_WITH_AS(construct_abelian({2}, 1, Field::make(FieldSpec::prime(7))->one()),
                       doctest::Contains("CharTooSmall"), Error);

  // the odd chain works through the mixed case (n < k)
  auto q3 = Field::make(FieldSpec::cyclotomic(3));
  ConstructionResult r5 = construct_abelian({3, 3}, 1, q3->from_integer(4));
  CHECK(r5.group.order() == 9);
  CHECK(r5.achieved == q3->from_integer(4));
  CHECK(matches_invariant_factors(r5.group.table, {3, 3}));
}

TEST_CASE("construction groups are verified by brute force") {
  auto q12 = Field::make(FieldSpec::cyclotomic(12));
  for (long long v : {-7, 0, 1, 13}) {
    ConstructionResult r = construct_cyclic(6, 2, q12->from_integer(v));
    CHECK(sigma_brute(r.group, r.monomial) == q12->from_integer(v));
  }
}
