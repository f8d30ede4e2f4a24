#include <doctest.h>

#include <array>
#include <numeric>
#include <sstream>

#include "weightsum/group.hpp"

using namespace weightsum;

namespace {

// Permutations of {0,1,2} under composition: the order-6 nonabelian table.
using Perm = std::array<int, 3>;

FiniteGroup<Perm> symmetric_3() {
  Perm transposition = {1, 0, 2};
  Perm cycle = {1, 2, 0};
  auto mul = [](const Perm& a, const Perm& b) {
    Perm c;
    for (int i = 0; i < 3; ++i) c[i] = a[b[i]];
    return c;
  };
  auto inv = [](const Perm& a) {
    Perm c;
    for (int i = 0; i < 3; ++i) c[a[i]] = i;
    return c;
  };
  auto key = [](const Perm& a) {
    std::ostringstream os;
    for (int v : a) os << v;
    return os.str();
  };
  return close_group<Perm>({transposition, cycle}, mul, inv, key, 10);
}

FiniteGroup<int> cyclic(int n) {
  auto mul = [n](int a, int b) { return (a + b) % n; };
  auto inv = [n](int a) { return (n - a) % n; };
  auto key = [](int a) { return std::to_string(a); };
  return close_group<int>({1 % n}, mul, inv, key, static_cast<std::size_t>(n) + 1);
}

// Z/a x Z/b as pairs under componentwise addition.
FiniteGroup<std::pair<int, int>> product_group(int a, int b) {
  using E = std::pair<int, int>;
  auto mul = [=](const E& x, const E& y) {
    return E{(x.first + y.first) % a, (x.second + y.second) % b};
  };
  auto inv = [=](const E& x) { return E{(a - x.first) % a, (b - x.second) % b}; };
  auto key = [](const E& x) { return std::to_string(x.first) + "," + std::to_string(x.second); };
  return close_group<E>({E{1, 0}, E{0, 1}}, mul, inv, key, static_cast<std::size_t>(a * b) + 1);
}

}  // namespace

TEST_CASE("closure basics") {
  auto c3 = cyclic(3);
  CHECK(c3.order() == 3);
  c3.table.validate();

  auto s3 = symmetric_3();
  CHECK(s3.order() == 6);
  CHECK_FALSE(is_abelian(s3.table));

  auto mul = [](int a, int b) { return a + b; };
  auto inv = [](int a) { return -a; };
  auto key = [](int a) { return std::to_string(a); };
  CHECK_THROWS_WITH_AS(close_group<int>({1}, mul, inv, key, 100), doctest::Contains("CapExceeded"),
                       Error);
}

TEST_CASE("commutator subgroup") {
  auto s3 = symmetric_3();
  CHECK(commutator_subgroup(s3.table).size() == 3);  // A_3

  auto c6 = cyclic(6);
  CHECK(commutator_subgroup(c6.table).size() == 1);

  auto c1 = cyclic(1);
  CHECK(commutator_subgroup(c1.table).size() == 1);
}

TEST_CASE("sylow subgroups") {
  auto c12 = cyclic(12);
  CHECK(sylow_subgroup(c12.table, 2).size() == 4);
  CHECK(sylow_subgroup(c12.table, 3).size() == 3);

  auto c6 = cyclic(6);
  CHECK(sylow_subgroup(c6.table, 5).size() == 1);

  auto v4ish = product_group(2, 2);
  CHECK(sylow_subgroup(v4ish.table, 2).size() == 4);

  auto s3 = symmetric_3();
  CHECK(sylow_subgroup(s3.table, 2).size() == 2);
  CHECK(sylow_subgroup(s3.table, 3).size() == 3);
}

TEST_CASE("hall complements") {
  auto c6 = cyclic(6);
  CHECK(hall_complement(c6.table, 3).size() == 2);

  auto c9 = cyclic(9);
  CHECK(hall_complement(c9.table, 3).size() == 1);

  auto mixed = product_group(2, 4);
  CHECK(hall_complement(mixed.table, 2).size() == 1);

  auto s3 = symmetric_3();
  CHECK(hall_complement(s3.table, 3).size() == 2);
  CHECK(is_solvable(s3.table));
}

TEST_CASE("quotients") {
  auto s3 = symmetric_3();
  auto comm = commutator_subgroup(s3.table);
  Quotient q = quotient_group(s3.table, comm);
  CHECK(q.table.n == 2);
  CHECK(is_abelian(q.table));

  auto c6 = cyclic(6);
  auto sub3 = sylow_subgroup(c6.table, 3);
  CHECK(quotient_group(c6.table, sub3).table.n == 2);
  CHECK(quotient_group(c6.table, {0}).table.n == 6);

  // the order-2 subgroup of S_3 is not normal
  auto sub2 = sylow_subgroup(s3.table, 2);
  CHECK_THROWS_WITH_AS(quotient_group(s3.table, sub2), doctest::Contains("NotNormal"), Error);
}

TEST_CASE("element orders and Lagrange") {
  auto s3 = symmetric_3();
  CHECK(element_order(s3.table, 0) == 1);
  std::size_t order_sum = 0;
  for (std::size_t i = 0; i < s3.order(); ++i) {
    std::size_t o = element_order(s3.table, i);
    CHECK(6 % o == 0);
    order_sum += o;
  }
  CHECK(order_sum == 1 + 2 + 2 + 2 + 3 + 3);

  for (auto sub : {commutator_subgroup(s3.table), sylow_subgroup(s3.table, 2)})
    CHECK(s3.order() % sub.size() == 0);
}
