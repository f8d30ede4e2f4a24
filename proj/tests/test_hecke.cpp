#include <doctest.h>

#include "weightsum/hecke.hpp"

using namespace weightsum;

TEST_CASE("cartan matrices") {
  auto b2 = cartan_matrix('B', 2);
  CHECK(b2[0][1] == -1);
  CHECK(b2[1][0] == -2);  // row of the short root

  auto g2 = cartan_matrix('G', 2);
  CHECK(g2[0][1] * g2[1][0] == 3);

  auto d4 = cartan_matrix('D', 4);
  int edges = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (d4[i][j] != 0) ++edges;
  CHECK(edges == 3);  // a tree on 4 nodes

  auto e6 = cartan_matrix('E', 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(e6[i][i] == 2);
    for (int j = 0; j < 6; ++j) CHECK(e6[i][j] == e6[j][i]);  // simply laced
  }

  CHECK_THROWS_AS(cartan_matrix('F', 3), Error);
  CHECK_THROWS_AS(cartan_matrix('Z', 2), Error);
}

TEST_CASE("killed roots") {
  // char != 2: everything dies
  KilledRoots a2_char3 = killed_roots({{{'A', 2}}, 0}, 3);
  CHECK(a2_char3.killed[0] == std::vector<bool>{true, true});
  CHECK(a2_char3.survivor_count == 0);

  // B_2 char 2: the long root dies, the short one survives
  KilledRoots b2 = killed_roots({{{'B', 2}}, 0}, 2);
  CHECK(b2.killed[0] == std::vector<bool>{true, false});
  CHECK(b2.survivor_count == 1);

  // G_2 char 2: both die
  KilledRoots g2 = killed_roots({{{'G', 2}}, 0}, 2);
  CHECK(g2.killed[0] == std::vector<bool>{true, true});

  // A_1 char 2: the lone root survives
  KilledRoots a1 = killed_roots({{{'A', 1}}, 0}, 2);
  CHECK(a1.killed[0] == std::vector<bool>{false});

  // C_2 follows the B_2 labelling: one short survivor
  KilledRoots c2 = killed_roots({{{'C', 2}}, 0}, 2);
  CHECK(c2.survivor_count == 1);

  // C_3 has two short simple roots: everything dies
  KilledRoots c3 = killed_roots({{{'C', 3}}, 0}, 2);
  CHECK(c3.survivor_count == 0);

  // B_5 char 2: exactly the last root survives
  KilledRoots b5 = killed_roots({{{'B', 5}}, 0}, 2);
  CHECK(b5.survivor_count == 1);
  CHECK_FALSE(b5.killed[0][4]);

  // components accumulate
  KilledRoots mixed = killed_roots({{{'B', 2}, {'A', 1}, {'F', 4}}, 0}, 2);
  CHECK(mixed.survivor_count == 2);
}

TEST_CASE("weight group description") {
  auto q = Field::make(FieldSpec::rational());
  auto f2 = Field::make(FieldSpec::prime(2));

  WeightGroupDescription d0 = smash_weights({{{'A', 2}}, 0}, q);
  CHECK_FALSE(d0.weyl_collapsed);
  CHECK(d0.additive_rank == 0);

  WeightGroupDescription d1 = smash_weights({{{'A', 2}}, 3}, q);
  CHECK(d1.additive_rank == 3);

  WeightGroupDescription d2 = smash_weights({{{'B', 2}}, 1}, f2);
  CHECK(d2.weyl_collapsed);
  CHECK(d2.additive_rank == 2);
}

TEST_CASE("sigma at powers of the short root") {
  auto f4 = Field::make(FieldSpec::prime_ext(2, {1, 1, 1}));
  FieldElement t = f4->ext_generator();

  // k = 1: Sigma = c^n
  for (std::uint64_t n = 1; n <= 6; ++n) {
    SigmaReport r = sigma_alpha_power({t}, n);
    CHECK(r.agree);
    CHECK(*r.closed == t.pow(static_cast<long long>(n)));
  }

  // k = 2, n = 3: c1 c2^2 + c1^2 c2
  FieldElement c1 = f4->one(), c2 = t;
  SigmaReport r = sigma_alpha_power({c1, c2}, 3);
  CHECK(r.agree);
  CHECK(*r.closed == c1 * c2 * c2 + c1 * c1 * c2);

  // k > binary weight of n: zero
  auto f16 = Field::make(FieldSpec::prime_ext(2, {1, 1, 0, 0, 1}));
  FieldElement u = f16->ext_generator();
  std::vector<FieldElement> four = {f16->one(), u, u * u, u * u * u};
  SigmaReport r8 = sigma_alpha_power(four, 8);  // popcount(8) = 1 < 4
  CHECK(r8.agree);
  CHECK(r8.closed->is_zero());

  // dependent generators are rejected
  CHECK_THROWS_WITH_AS(sigma_alpha_power({t, t}, 2), doctest::Contains("DependentGenerators"),
                       Error);
  CHECK_THROWS_WITH_AS(sigma_alpha_power({f4->zero()}, 2),
                       doctest::Contains("DependentGenerators"), Error);

  // wrong characteristic
  auto f3 = Field::make(FieldSpec::prime(3));
  CHECK_THROWS_WITH_AS(sigma_alpha_power({f3->one()}, 2),
                       doctest::Contains("WrongCharacteristic"), Error);
}
