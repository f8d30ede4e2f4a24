#include <doctest.h>

#include <random>

#include "weightsum/config.hpp"
#include "weightsum/constructions.hpp"
#include "weightsum/hopf.hpp"
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

bool throws_code(const std::function<void()>& f, const std::string& code) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("counit and evaluation in H_1") {
  auto pres = build_hn(1);
  auto Q = Field::make(FieldSpec::rational());
  Character eps = counit(pres, Q);
  CHECK(eps.value("g").is_one());
  CHECK(eps.value("h1").is_zero());

  // chi = (a, z) at h*g evaluates to a*z
  Character chi = hn_char(pres, Q, {Q->from_integer(5)}, Q->from_integer(7));
  Monomial hg = parse_monomial("h1*g");
  CHECK(chi.eval(hg) == Q->from_integer(35));
}

TEST_CASE("convolution is the affine law of H_n") {
  auto pres = build_hn(2);
  auto Q = Field::make(FieldSpec::rational());
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> small(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    FieldElement z = Q->from_integer(small(rng) == 0 ? 1 : small(rng));
    FieldElement zp = Q->from_integer(small(rng) == 0 ? 1 : small(rng));
    if (z.is_zero() || zp.is_zero()) continue;
    std::vector<FieldElement> a = {Q->from_integer(small(rng)), Q->from_integer(small(rng))};
    std::vector<FieldElement> b = {Q->from_integer(small(rng)), Q->from_integer(small(rng))};
    Character x = hn_char(pres, Q, a, z);
    Character y = hn_char(pres, Q, b, zp);
    Character xy = convolve(x, y);
    CHECK(xy.value("g") == z * zp);
    for (int i = 0; i < 2; ++i) {
      std::string h = "h" + std::to_string(i + 1);
      CHECK(xy.value(h) == a[i] + z * b[i]);  // (a, z) * (a', z') = (a + z a', z z')
    }
    Character xinv = char_inverse(x);
    CHECK(xinv.value("g") == z.inverse());
    for (int i = 0; i < 2; ++i)
      CHECK(xinv.value("h" + std::to_string(i + 1)) == -(z.inverse() * a[i]));
    CHECK(convolve(x, xinv) == counit(pres, Q));
  }
}

TEST_CASE("H_1 over Q: the order-2 character squares to the counit") {
  auto pres = build_hn(1);
  auto Q = Field::make(FieldSpec::rational());
  Character gamma = hn_char(pres, Q, {Q->from_integer(1)}, Q->from_integer(-1));
  CHECK(convolve(gamma, gamma) == counit(pres, Q));
  CHECK(char_inverse(counit(pres, Q)) == counit(pres, Q));
}

TEST_CASE("character validation") {
  auto uql = build_uql(1, 4);
  auto q4 = Field::make(FieldSpec::cyclotomic(4));
  std::map<std::string, FieldElement> good{{"K1", q4->from_integer(-1)},
                                           {"e1", q4->zero()},
                                           {"f1", q4->zero()}};
  CHECK_NOTHROW(validate_character(uql, q4, good));

  std::map<std::string, FieldElement> bad{{"K1", q4->zeta()},
                                          {"e1", q4->zero()},
                                          {"f1", q4->zero()}};
  CHECK(throws_code([&] { validate_character(uql, q4, bad); }, "ConstraintViolated"));

  auto hn = build_hn(1);
  std::map<std::string, FieldElement> zero_g{{"g", q4->zero()}, {"h1", q4->one()}};
  CHECK(throws_code([&] { validate_character(hn, q4, zero_g); }, "ZeroGrouplikeValue"));
}

TEST_CASE("annihilated letters kill evaluation") {
  auto vir = build_virasoro({5});
  auto q3 = Field::make(FieldSpec::cyclotomic(3));
  std::map<std::string, FieldElement> values{{"T", q3->zeta()}};
  Character mu = validate_character(vir, q3, values);
  Monomial word;
  word.letters.push_back({"T", 2});
  word.letters.push_back({"e5", 1});
  CHECK(mu.eval(word).is_zero());
  CHECK(counit(vir, q3).eval(word).is_zero());
}

TEST_CASE("delta expansion against convolution") {
  auto pres = build_hn(2);
  auto q4 = Field::make(FieldSpec::cyclotomic(4));
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> zz(0, 3);
  auto random_char = [&] {
    FieldElement z = q4->zeta().pow(zz(rng));
    return hn_char(pres, q4, {q4->from_integer(small(rng)), q4->from_integer(small(rng))}, z);
  };
  Monomial m;
  m.letters.push_back({"h1", 1});
  m.letters.push_back({"g", 2});
  m.letters.push_back({"h2", 1});
  for (int trial = 0; trial < 100; ++trial) {
    Character a = random_char(), b = random_char();
    std::vector<Character> pair = {a, b};
    CHECK(delta_power_eval(pair, m) == convolve(a, b).eval(m));
    Character c = random_char();
    std::vector<Character> triple = {a, b, c};
    CHECK(delta_power_eval(triple, m) == convolve(convolve(a, b), c).eval(m));
  }
  // n = 3 on a grouplike letter is the diagonal product
  Monomial just_g;
  just_g.letters.push_back({"g", 1});
  Character a = random_char(), b = random_char(), c = random_char();
  std::vector<Character> triple = {a, b, c};
  CHECK(delta_power_eval(triple, just_g) == a.value("g") * b.value("g") * c.value("g"));
}

TEST_CASE("delta expansion reproduces the geometric identity") {
  // gamma^n(h) = gamma(h) (gamma(g)^n - gamma(g')^n) / (gamma(g) - gamma(g'))
  HopfPresentation hp;
  hp.name = "K4_pres";
  hp.grouplikes.push_back({"K", 4});
  hp.skewprims.push_back({"h", {{"K", 1}}, {{"K", 2}}});
  auto pres = make_presentation(std::move(hp));
  auto q4 = Field::make(FieldSpec::cyclotomic(4));
  std::map<std::string, FieldElement> values{{"K", q4->zeta()}, {"h", q4->from_integer(3)}};
  Character gamma = validate_character(pres, q4, values);
  Monomial h;
  h.letters.push_back({"h", 1});
  FieldElement vg = gamma.value("K");
  FieldElement vgp = vg * vg;
  for (int n = 2; n <= 6; ++n) {
    std::vector<Character> copies(static_cast<std::size_t>(n), gamma);
    FieldElement expected =
        gamma.value("h") * (vg.pow(n) - vgp.pow(n)) / (vg - vgp);
    CHECK(delta_power_eval(copies, h) == expected);
  }
}

TEST_CASE("character group closure") {
  auto pres = build_hn(1);
  auto q3 = Field::make(FieldSpec::cyclotomic(3));

  // {(0, zeta_3)} generates a cyclic group of order 3
  Character zeta_char = hn_char(pres, q3, {q3->zero()}, q3->zeta());
  CHECK(generate_character_group({zeta_char}, 100).order() == 3);

  // {(1, -1)} squares to the counit
  Character invol = hn_char(pres, q3, {q3->one()}, -q3->one());
  CHECK(generate_character_group({invol}, 100).order() == 2);

  // together they generate the infinite translation (1 - zeta_3, 1)
  CHECK(throws_code([&] { generate_character_group({invol, zeta_char}, 100); }, "CapExceeded"));
}

TEST_CASE("group axioms on a generated character group") {
  auto pres = build_hn(1);
  auto q4 = Field::make(FieldSpec::cyclotomic(4));
  Character gen = hn_char(pres, q4, {q4->from_integer(2)}, q4->zeta());
  CharacterGroup pi = generate_character_group({gen}, 100);
  CHECK(pi.order() == 4);
  pi.table.validate();
  CHECK(element_order(pi.table, pi.generator_indices[0]) == 4);

  // epsilon * gamma = gamma and gamma * gamma^{-1} = epsilon, value-wise
  for (const auto& chi : pi.elements) {
    CHECK(convolve(pi.elements[0], chi) == chi);
    CHECK(convolve(chi, char_inverse(chi)) == pi.elements[0]);
  }
}

TEST_CASE("orders in Gamma_{H_1}") {
  auto pres = build_hn(1);
  auto q4 = Field::make(FieldSpec::cyclotomic(4));
  Character c = hn_char(pres, q4, {q4->zero()}, q4->zeta());
  CharacterGroup pi = generate_character_group({c}, 16);
  CHECK(element_order(pi.table, pi.generator_indices[0]) == 4);

  auto f3 = Field::make(FieldSpec::prime(3));
  Character t = hn_char(pres, f3, {f3->one()}, f3->one());
  CharacterGroup pi3 = generate_character_group({t}, 16);
  CHECK(element_order(pi3.table, pi3.generator_indices[0]) == 3);
}

TEST_CASE("mixed presentations and unknown generators are rejected") {
  auto q = Field::make(FieldSpec::rational());
  auto h1 = build_hn(1);
  auto h2 = build_hn(2);
  Character a = counit(h1, q);
  Character b = counit(h2, q);
  CHECK_THROWS_WITH_AS(convolve(a, b), doctest::Contains("MixedPresentations"), Error);

  Monomial bogus;
  bogus.letters.push_back({"nope", 1});
  CHECK_THROWS_WITH_AS(a.eval(bogus), doctest::Contains("UnknownGenerator"), Error);
}

TEST_CASE("pseudo-primitive power formula") {
  // h in H_{K,K}: gamma^{*m}(h) = m gamma(K)^{m-1} gamma(h)
  HopfPresentation hp;
  hp.name = "pseudo";
  hp.grouplikes.push_back({"K", 3});
  hp.skewprims.push_back({"h", {{"K", 1}}, {{"K", 1}}});
  auto pres = make_presentation(std::move(hp));
  auto f7 = Field::make(FieldSpec::prime(7));
  FieldElement z = f7->primitive_root_of_unity(3);
  std::map<std::string, FieldElement> values{{"K", z}, {"h", f7->from_integer(4)}};
  Character gamma = validate_character(pres, f7, values);
  Monomial h;
  h.letters.push_back({"h", 1});
  Character power = counit(pres, f7);
  for (int m = 0; m <= 21; ++m) {
    FieldElement expected = f7->from_integer(m) * z.pow(m - 1) * gamma.value("h");
    CHECK(power.eval(h) == expected);
    power = convolve(power, gamma);
  }
}
