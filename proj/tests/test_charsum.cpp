#include <doctest.h>

#include <numeric>
#include <random>

#include "weightsum/charsum.hpp"
#include "weightsum/config.hpp"
#include "weightsum/constructions.hpp"
#include "weightsum/modular.hpp"
#include "weightsum/qexamples.hpp"

using namespace weightsum;

namespace {

Character hn_char(const PresentationPtr& pres, const FieldPtr& F,
                  const std::vector<FieldElement>& a, const FieldElement& z) {
  std::map<std::string, FieldElement> values;
  values.emplace("g", z);
  for (std::size_t i = 0; i < a.size(); ++i) values.emplace("h" + std::to_string(i + 1), a[i]);
  return validate_character(pres, F, values);
}

PresentationPtr k_pres(std::uint64_t order, long long e1, long long e2) {
  HopfPresentation p;
  p.name = "k_skew";
  p.grouplikes.push_back({"K", order});
  GroupWord g, gp;
  if (e1) g.emplace_back("K", e1);
  if (e2) gp.emplace_back("K", e2);
  p.skewprims.push_back({"h", std::move(g), std::move(gp)});
  return make_presentation(std::move(p));
}

}  // namespace

TEST_CASE("sigma_brute basics") {
  auto q4 = Field::make(FieldSpec::cyclotomic(4));
  auto pres = build_hn(2);

  // Sigma_Pi(1) = |Pi| in the field
  Character gen = hn_char(pres, q4, {q4->from_integer(2), q4->from_integer(3)}, q4->zeta());
  CharacterGroup pi = generate_character_group({gen}, 16);
  CHECK(sigma_brute(pi, Monomial::one()) == q4->from_integer(4));

  // Pi = {eps, (a,-1)}: Sigma(h_1 h_2) = a_1 a_2
  Character invol = hn_char(pres, q4, {q4->from_integer(2), q4->from_integer(5)}, -q4->one());
  CharacterGroup pi2 = generate_character_group({invol}, 8);
  CHECK(pi2.order() == 2);
  CHECK(sigma_brute(pi2, parse_monomial("h1*h2")) == q4->from_integer(10));

  // any annihilated letter kills every term
  auto vir = build_virasoro({2});
  auto q3 = Field::make(FieldSpec::cyclotomic(3));
  std::map<std::string, FieldElement> mv{{"T", q3->zeta()}};
  CharacterGroup pi3 = generate_character_group({validate_character(vir, q3, mv)}, 8);
  CHECK(pi3.order() == 3);
  Monomial word = parse_monomial("T^2*e2");
  CHECK(sigma_brute(pi3, word).is_zero());
}

TEST_CASE("Sigma at 1 vanishes exactly when the characteristic divides |Pi|") {
  auto f3 = Field::make(FieldSpec::prime(3));
  auto pres = build_hn(1);

  // |Pi| = 3 in characteristic 3
  Character translation = hn_char(pres, f3, {f3->one()}, f3->one());
  CharacterGroup pi3 = generate_character_group({translation}, 8);
  CHECK(pi3.order() == 3);
  CHECK(sigma_brute(pi3, Monomial::one()).is_zero());

  // |Pi| = 2 in characteristic 3
  Character invol = hn_char(pres, f3, {f3->one()}, -f3->one());
  CharacterGroup pi2 = generate_character_group({invol}, 8);
  CHECK(pi2.order() == 2);
  CHECK_FALSE(sigma_brute(pi2, Monomial::one()).is_zero());

  // characteristic zero never kills it
  auto q = Field::make(FieldSpec::rational());
  CharacterGroup pi0 = generate_character_group({hn_char(pres, q, {q->one()}, -q->one())}, 8);
  CHECK_FALSE(sigma_brute(pi0, Monomial::one()).is_zero());
}

TEST_CASE("kernels at a skew letter form subgroups, and the order trichotomy") {
  // L5(1): {gamma : gamma(h) = 0} is a subgroup of every test group.
  // L5(5): gamma(g) != gamma(g'), or gamma(h) = 0, or ch(R) | n_gamma.
  auto run = [](const CharacterGroup& pi, const std::string& letter) {
    const auto& pres = group_presentation(pi);
    const SkewGen* sk = pres->find_skew(letter);
    std::vector<std::size_t> kernel;
    for (std::size_t i = 0; i < pi.order(); ++i)
      if (pi.elements[i].value(letter).is_zero()) kernel.push_back(i);
    CHECK(is_subgroup(pi.table, kernel));
    std::uint64_t p = group_field(pi)->characteristic();
    for (std::size_t i = 0; i < pi.order(); ++i) {
      const Character& c = pi.elements[i];
      bool separates = c.eval_word(sk->g) != c.eval_word(sk->gp);
      bool kills = c.value(letter).is_zero();
      bool char_divides = p > 0 && element_order(pi.table, i) % p == 0;
      CHECK((separates || kills || char_divides));
    }
  };

  auto q4 = Field::make(FieldSpec::cyclotomic(4));
  auto pres = build_hn(1);
  run(generate_character_group({hn_char(pres, q4, {q4->from_integer(2)}, q4->zeta())}, 8), "h1");

  auto f3 = Field::make(FieldSpec::prime(3));
  run(generate_character_group({hn_char(pres, f3, {f3->one()}, f3->one()),
                                hn_char(pres, f3, {f3->zero()}, -f3->one())},
                               16),
      "h1");
}

TEST_CASE("Hall and Sylow orders multiply to the group order") {
  // S_3 inside Gamma_{H_1} over F_3: a translation of order 3 and the
  // inversion (0,-1).
  auto f3 = Field::make(FieldSpec::prime(3));
  auto pres = build_hn(1);
  CharacterGroup pi = generate_character_group({hn_char(pres, f3, {f3->one()}, f3->one()),
                                                hn_char(pres, f3, {f3->zero()}, -f3->one())},
                                               16);
  CHECK(pi.order() == 6);
  CHECK_FALSE(is_abelian(pi.table));
  for (std::uint64_t p : {2, 3, 5}) {
    auto sylow = sylow_subgroup(pi.table, p);
    auto hall = hall_complement(pi.table, p);
    CHECK(sylow.size() * hall.size() == pi.order());
  }
}

TEST_CASE("grouplike orthogonality") {
  auto q4 = Field::make(FieldSpec::cyclotomic(4));
  auto ring = build_group_ring(1, 4);
  std::map<std::string, FieldElement> values{{"K1", q4->zeta()}};
  CharacterGroup pi = generate_character_group({validate_character(ring, q4, values)}, 8);
  CHECK(pi.order() == 4);

  SigmaReport at_k = sigma_grouplike(pi, parse_monomial("K1"));
  CHECK(at_k.agree);
  CHECK(at_k.closed->is_zero());
  CHECK(at_k.path == "P5.nontrivial");

  SigmaReport at_one = sigma_grouplike(pi, Monomial::one());
  CHECK(*at_one.closed == q4->from_integer(4));
  CHECK(at_one.path == "P5.trivial");

  SigmaReport at_k4 = sigma_grouplike(pi, parse_monomial("K1^4"));
  CHECK(*at_k4.closed == q4->from_integer(4));

  GPiMembership m = membership_gpi(pi, parse_word("K1"));
  CHECK_FALSE(m.in_gpi);
  CHECK(m.failing_witness.has_value());
  CHECK(membership_gpi(pi, parse_word("K1^4")).in_gpi);

  // the counit-only group sends everything to 1
  CharacterGroup trivial = generate_character_group({counit(ring, q4)}, 4);
  CHECK(membership_gpi(trivial, parse_word("K1")).in_gpi);
}

TEST_CASE("T3 case 1: a witness moving both words") {
  auto q4 = Field::make(FieldSpec::cyclotomic(4));
  auto pres = k_pres(4, 1, 2);  // h in H_{K, K^2}
  std::map<std::string, FieldElement> values{{"K", q4->zeta()}, {"h", q4->from_integer(3)}};
  CharacterGroup pi = generate_character_group({validate_character(pres, q4, values)}, 8);
  SigmaReport r = sigma_skew(pi, "h");
  CHECK(r.path == "T3.case1");
  CHECK(r.closed->is_zero());
  CHECK(r.agree);
}

TEST_CASE("T3 case 2: the telescoping quotient") {
  auto q4 = Field::make(FieldSpec::cyclotomic(4));
  auto pres = build_hn(1);
  FieldElement a = q4->from_integer(3);
  Character gen = hn_char(pres, q4, {a}, q4->zeta());
  CharacterGroup pi = generate_character_group({gen}, 8);
  CHECK(pi.order() == 4);

  SigmaReport r = sigma_skew(pi, "h1");
  CHECK(r.path == "T3.case2");
  CHECK(r.agree);
  FieldElement expected = q4->from_integer(4) * a / (q4->one() - q4->zeta());
  CHECK(*r.closed == expected);

  // brute force telescopes: gamma^j(h) = a (1 - zeta^j) / (1 - zeta)
  FieldElement brute = q4->zero();
  for (int j = 0; j < 4; ++j)
    brute = brute + a * (q4->one() - q4->zeta().pow(j)) / (q4->one() - q4->zeta());
  CHECK(*r.brute == brute);
}

TEST_CASE("T3 case 3: 2 Sigma = 0") {
  // Almost primitive with characteristic 0: the involution sum must vanish.
  auto q = Field::make(FieldSpec::rational());
  auto pres = k_pres(2, 1, -1);  // K of order 2, h in H_{K, K^{-1}}
  std::map<std::string, FieldElement> values{{"K", -q->one()}, {"h", q->zero()}};
  CharacterGroup pi = generate_character_group({validate_character(pres, q, values)}, 8);
  SigmaReport r = sigma_skew(pi, "h");
  CHECK(r.agree);
  CHECK(r.closed->is_zero());

  // char 2 with content: a primitive letter and an order-2 translation
  auto f4 = Field::make(FieldSpec::prime_ext(2, {1, 1, 1}));
  HopfPresentation hp;
  hp.name = "prim";
  hp.skewprims.push_back({"h", {}, {}});
  auto prim = make_presentation(std::move(hp));
  FieldElement c = f4->ext_generator();
  std::map<std::string, FieldElement> tv{{"h", c}};
  CharacterGroup pi2 = generate_character_group({validate_character(prim, f4, tv)}, 8);
  CHECK(pi2.order() == 2);
  SigmaReport r2 = sigma_skew(pi2, "h");
  CHECK(r2.path == "Tunproved.order2");
  CHECK(*r2.closed == c);
  CHECK(r2.agree);

  // 4 | |Pi| kills the sum
  std::map<std::string, FieldElement> tv2{{"h", f4->one()}};
  CharacterGroup pi4 = generate_character_group(
      {validate_character(prim, f4, tv), validate_character(prim, f4, tv2)}, 8);
  CHECK(pi4.order() == 4);
  SigmaReport r4 = sigma_skew(pi4, "h");
  CHECK(r4.path == "Tunproved.div4");
  CHECK(r4.closed->is_zero());
  CHECK(r4.agree);
}

TEST_CASE("level function") {
  auto q4 = Field::make(FieldSpec::cyclotomic(4));
  auto pres = build_hn(1);
  FieldElement a = q4->from_integer(6);
  Character chi = hn_char(pres, q4, {a}, q4->zeta());
  CHECK(level_function(chi, "h1") == a / (q4->zeta() - q4->one()));

  // f_h(gamma^n) = f_h(gamma) whenever defined
  CharacterGroup pi = generate_character_group({chi}, 8);
  FieldElement base = level_function(chi, "h1");
  for (const auto& c : pi.elements) {
    if (c.value("g").is_one()) continue;
    CHECK(level_function(c, "h1") == base);
  }

  CHECK_THROWS_WITH_AS(level_function(counit(pres, q4), "h1"), doctest::Contains("NotInNh"),
                       Error);

  // weights commute at h exactly on level sets
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> quarter(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    Character x = hn_char(pres, q4, {q4->from_integer(small(rng))}, q4->zeta().pow(quarter(rng)));
    Character y = hn_char(pres, q4, {q4->from_integer(small(rng))}, q4->zeta().pow(quarter(rng)));
    bool commute = convolve(x, y).value("h1") == convolve(y, x).value("h1");
    bool same_level = level_function(x, "h1") == level_function(y, "h1");
    CHECK(commute == same_level);
  }
}

TEST_CASE("skew products: the dispatch") {
  auto q3 = Field::make(FieldSpec::cyclotomic(3));
  auto pres = build_hn(2);

  // (i): a character killing all letters while moving the grouplike word
  Character zero_char = hn_char(pres, q3, {q3->zero(), q3->zero()}, q3->zeta());
  CharacterGroup pi_i = generate_character_group({zero_char}, 8);
  SigmaReport r_i = sigma_product_general(pi_i, parse_monomial("h1*h2"));
  CHECK(r_i.path == "S5.zero_letters");
  CHECK(r_i.closed->is_zero());
  CHECK(r_i.agree);

  // order-2 group with both a_i = 0: brute force gives 0 + 0
  auto q = Field::make(FieldSpec::rational());
  Character invol = hn_char(pres, q, {q->zero(), q->zero()}, -q->one());
  CharacterGroup pi0 = generate_character_group({invol}, 8);
  SigmaReport r0 = sigma_product_general(pi0, parse_monomial("h1*h2"));
  CHECK(r0.agree);
  CHECK(r0.closed->is_zero());

  // (iii): a pseudo-primitive letter away from the characteristic
  {
    HopfPresentation hp;
    hp.name = "mixed";
    hp.grouplikes.push_back({"g", 0});
    hp.skewprims.push_back({"w", {{"g", 1}}, {}});
    hp.skewprims.push_back({"h", {}, {}});  // primitive, hence pseudo-primitive
    auto mixed = make_presentation(std::move(hp));
    std::map<std::string, FieldElement> mv{
        {"g", q3->zeta()}, {"w", q3->from_integer(2)}, {"h", q3->zero()}};
    CharacterGroup pi = generate_character_group({validate_character(mixed, q3, mv)}, 8);
    SigmaReport r = sigma_product_general(pi, parse_monomial("w*h"));
    CHECK(r.path == "P7.pseudo");
    CHECK(r.closed->is_zero());
    CHECK(r.agree);
  }

  // gg' in G_Pi with odd length over char 0: several vanishing rules apply
  // at once; whichever fires, the value is 0 and matches brute force.
  {
    auto q4 = Field::make(FieldSpec::cyclotomic(4));
    auto pres4 = k_pres(4, 1, -1);
    std::map<std::string, FieldElement> kv{{"K", q4->zeta()}, {"h", q4->from_integer(2)}};
    CharacterGroup pi = generate_character_group({validate_character(pres4, q4, kv)}, 8);
    Monomial m;
    for (int i = 0; i < 3; ++i) m.letters.push_back({"h", 1});
    SigmaReport r = sigma_product_general(pi, m);
    CHECK(r.agree);
    CHECK(r.closed->is_zero());
  }

  // (iv) proper: characteristic 2 with an even product of primitives
  {
    auto f4 = Field::make(FieldSpec::prime_ext(2, {1, 1, 1}));
    HopfPresentation hp;
    hp.name = "prim2";
    hp.skewprims.push_back({"h1", {}, {}});
    hp.skewprims.push_back({"h2", {}, {}});
    auto prim = make_presentation(std::move(hp));
    FieldElement c1 = f4->ext_generator(), c2 = f4->one() + f4->ext_generator();
    std::map<std::string, FieldElement> tv{{"h1", c1}, {"h2", c2}};
    CharacterGroup pi = generate_character_group({validate_character(prim, f4, tv)}, 8);
    CHECK(pi.order() == 2);
    SigmaReport r = sigma_product_general(pi, parse_monomial("h1*h2"));
    CHECK(r.path == "S5.involution");
    CHECK(r.agree);
    CHECK(*r.closed == c1 * c2);
  }

  // (v) abelian: the closed form on H_2 over Q(zeta_3)
  {
    FieldElement a1 = q3->from_integer(2), a2 = q3->from_integer(5);
    Character gen = hn_char(pres, q3, {a1, a2}, q3->zeta());
    CharacterGroup pi = generate_character_group({gen}, 8);
    CHECK(pi.order() == 3);
    SigmaReport r = sigma_product_general(pi, parse_monomial("h1*h2"));
    CHECK(r.path == "Tabel");
    CHECK(r.agree);
    // closed = (-1)^2 * 3 * prod a_i/(zeta - 1) * |{I : 3 divides |I|}|
    FieldElement expected = q3->from_integer(3) * (a1 / (q3->zeta() - q3->one())) *
                            (a2 / (q3->zeta() - q3->one()));
    CHECK(*r.closed == expected);
  }
}

TEST_CASE("stabilizer subgroups") {
  auto q4 = Field::make(FieldSpec::cyclotomic(4));
  auto ring = build_group_ring(1, 4);
  std::map<std::string, FieldElement> values{{"K1", q4->zeta()}};
  CharacterGroup pi = generate_character_group({validate_character(ring, q4, values)}, 8);

  // for a grouplike letter, Gamma_g = Gamma'_g = {gamma : gamma(g) = 1}
  StabilizerResult s = stabilizer_in_pi(pi, parse_monomial("K1"));
  std::vector<std::size_t> expected;
  for (std::size_t i = 0; i < pi.order(); ++i)
    if (pi.elements[i].value("K1").is_one()) expected.push_back(i);
  CHECK(s.stabilizer == expected);
  REQUIRE(s.fixed_monoid.has_value());
  CHECK(*s.fixed_monoid == expected);

  // H_1 with Pi = <(a,-1)>, a != 0: only eps stabilizes h
  auto pres = build_hn(1);
  Character invol = hn_char(pres, q4, {q4->from_integer(3)}, -q4->one());
  CharacterGroup pi2 = generate_character_group({invol}, 8);
  StabilizerResult s2 = stabilizer_in_pi(pi2, parse_monomial("h1"));
  CHECK(s2.stabilizer == std::vector<std::size_t>{0});
}

TEST_CASE("quotient reduction") {
  auto q4 = Field::make(FieldSpec::cyclotomic(4));
  auto pres = build_hn(1);
  Character gen = hn_char(pres, q4, {q4->from_integer(2)}, q4->zeta());
  CharacterGroup pi = generate_character_group({gen}, 8);
  Monomial h = parse_monomial("h1");

  std::mt19937_64 rng(17);
  SigmaReport r = sigma_via_quotient(pi, {0}, h, &rng);
  CHECK(r.agree);

  auto stab = stabilizer_in_pi(pi, h).stabilizer;
  SigmaReport r2 = sigma_via_quotient(pi, stab, h, &rng);
  CHECK(r2.agree);

  // the full group does not stabilize h here, so it is rejected
  std::vector<std::size_t> whole(pi.order());
  std::iota(whole.begin(), whole.end(), 0);
  if (stab.size() < pi.order()) {
    CHECK_THROWS_WITH_AS(sigma_via_quotient(pi, whole, h, &rng),
                         doctest::Contains("NotStabilizing"), Error);
  }
}

TEST_CASE("direct products") {
  auto q = Field::make(FieldSpec::rational());
  HopfPresentation hp;
  hp.name = "tensor";
  for (int i = 1; i <= 2; ++i) {
    hp.grouplikes.push_back({"g" + std::to_string(i), 0});
    hp.skewprims.push_back({"x" + std::to_string(i), {{"g" + std::to_string(i), 1}}, {}});
  }
  auto pres = make_presentation(std::move(hp));
  FieldElement a1 = q->from_integer(3), a2 = q->from_integer(7);
  std::map<std::string, FieldElement> v1{
      {"g1", -q->one()}, {"x1", a1}, {"g2", q->one()}, {"x2", q->zero()}};
  std::map<std::string, FieldElement> v2{
      {"g1", q->one()}, {"x1", q->zero()}, {"g2", -q->one()}, {"x2", a2}};
  Character c1 = validate_character(pres, q, v1);
  Character c2 = validate_character(pres, q, v2);
  CharacterGroup pi = generate_character_group({c1, c2}, 16);
  CHECK(pi.order() == 4);

  std::vector<std::vector<std::size_t>> factors = {
      subgroup_closure(pi.table, {pi.generator_indices[0]}),
      subgroup_closure(pi.table, {pi.generator_indices[1]})};
  SigmaReport r = sigma_direct_product(pi, factors, parse_monomial("x1*x2"));
  CHECK(r.agree);
  CHECK(*r.closed == a1 * a2);

  // a trivial factor zeroes the product
  CharacterGroup pi2 = generate_character_group({c2}, 8);
  std::vector<std::size_t> all2(pi2.order());
  std::iota(all2.begin(), all2.end(), 0);
  SigmaReport r0 = sigma_direct_product(pi2, {{0}, all2}, parse_monomial("x1*x2"));
  CHECK(r0.agree);
  CHECK(r0.closed->is_zero());

  // k = 1 degenerates to the brute-force sum
  std::vector<std::size_t> all(pi.order());
  std::iota(all.begin(), all.end(), 0);
  SigmaReport r1 = sigma_direct_product(pi, {all}, parse_monomial("x1"));
  CHECK(r1.agree);
  CHECK(*r1.closed == *r1.brute);
}

TEST_CASE("convolution identities") {
  auto q = Field::make(FieldSpec::rational());
  auto pres = build_hn(1);
  FieldElement a = q->from_integer(4);
  Character invol = hn_char(pres, q, {a}, -q->one());
  CharacterGroup pi = generate_character_group({invol}, 8);
  auto checks = verify_convolution_identities(pi, parse_monomial("h1"));
  for (const auto& c : checks) {
    INFO(c.name, " ", c.detail);
    CHECK(c.pass);
  }
  // E4 at lambda = (a,-1): (-1-1) Sigma(h) = a (Sigma(g) - Sigma(1));
  // Sigma(h) = a, Sigma(g) = 0, Sigma(1) = 2, so both sides are -2a.
  FieldElement sigma_h = sigma_brute(pi, parse_monomial("h1"));
  CHECK(sigma_h == a);
  CHECK((-q->one() - q->one()) * sigma_h == a * (q->zero() - q->from_integer(2)));
}
