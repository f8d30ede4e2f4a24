#include "weightsum/verification.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "weightsum/constructions.hpp"
#include "weightsum/hecke.hpp"
#include "weightsum/modular.hpp"
#include "weightsum/qexamples.hpp"

namespace weightsum {

namespace {

struct Ctx {
  std::mt19937_64 rng;
  SuiteResult result;

  explicit Ctx(std::string name, std::uint64_t seed) : rng(seed) { result.name = std::move(name); }

  void check(bool ok, const std::string& msg) {
    ++result.checks;
    if (!ok) {
      ++result.failures;
      if (result.messages.size() < 10) result.messages.push_back(msg);
    }
  }

  void note(const std::string& tag) { ++result.tally[tag]; }

  long long pick_int(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  }
};

void check_report(Ctx& ctx, const SigmaReport& r, const std::string& what) {
  ctx.check(r.agree, what + ": brute != closed on path " + r.path);
  ctx.note(r.path);
}

std::vector<FieldSpec> char0_specs() {
  return {FieldSpec::rational(),     FieldSpec::cyclotomic(3), FieldSpec::cyclotomic(4),
          FieldSpec::cyclotomic(5),  FieldSpec::cyclotomic(6), FieldSpec::cyclotomic(8),
          FieldSpec::cyclotomic(12)};
}

std::vector<FieldSpec> charp_specs() {
  return {FieldSpec::prime(2),          FieldSpec::prime(3),
          FieldSpec::prime(5),          FieldSpec::prime(7),
          FieldSpec::prime_ext(2, {1, 1, 1}),  // F_4
          FieldSpec::prime_ext(3, {1, 0, 1}),  // F_9
          FieldSpec::prime_ext(2, {1, 1, 0, 1})};  // F_8
}

FieldElement random_root(Ctx& ctx, const FieldPtr& F, std::uint64_t dividing = 0) {
  auto roots = F->roots_of_unity_dividing(dividing);
  return ctx.pick(roots);
}

FieldElement random_small(Ctx& ctx, const FieldPtr& F) {
  return F->from_integer(ctx.pick_int(-4, 4));
}

// A character whose cyclic closure is finite: grouplike generators get roots
// of unity; a skew letter gets an arbitrary value when its two words
// separate, otherwise 0 (or anything in characteristic p).
Character random_finite_character(Ctx& ctx, const PresentationPtr& pres, const FieldPtr& F) {
  std::map<std::string, FieldElement> values;
  for (const auto& g : pres->grouplikes) values.emplace(g.name, random_root(ctx, F, g.order));
  Character partial = counit(pres, F);  // only used for word evaluation
  {
    std::map<std::string, FieldElement> tmp = values;
    for (const auto& s : pres->skewprims) tmp.emplace(s.name, F->zero());
    for (const auto& a : pres->annihilated) tmp.emplace(a, F->zero());
    partial = validate_character(pres, F, tmp);
  }
  for (const auto& s : pres->skewprims) {
    FieldElement vg = partial.eval_word(s.g);
    FieldElement vgp = partial.eval_word(s.gp);
    if (vg != vgp || F->characteristic() > 0) {
      FieldElement v = (ctx.pick_int(0, 1) == 0) ? random_small(ctx, F) : random_root(ctx, F);
      values.emplace(s.name, v);
    } else {
      values.emplace(s.name, F->zero());
    }
  }
  for (const auto& a : pres->annihilated) values.emplace(a, F->zero());
  return validate_character(pres, F, values);
}

CharacterGroup random_group(Ctx& ctx, const PresentationPtr& pres, const FieldPtr& F,
                            std::size_t max_order, int max_gens = 2) {
  for (int attempt = 0; attempt < 30; ++attempt) {
    std::vector<Character> gens;
    int count = static_cast<int>(ctx.pick_int(1, max_gens));
    for (int i = 0; i < count; ++i) gens.push_back(random_finite_character(ctx, pres, F));
    try {
      return generate_character_group(gens, max_order);
    } catch (const Error& e) {
      if (e.code() != "CapExceeded") throw;
    }
  }
  return generate_character_group({counit(pres, F)}, 1);
}

// Presentation generators ------------------------------------------------

PresentationPtr random_group_ring(Ctx& ctx) {
  unsigned n = static_cast<unsigned>(ctx.pick_int(1, 3));
  std::vector<std::uint64_t> orders = {0, 2, 3, 4, 6};
  HopfPresentation p;
  p.name = "random_group_ring";
  for (unsigned i = 1; i <= n; ++i)
    p.grouplikes.push_back({"K" + std::to_string(i), ctx.pick(orders)});
  return make_presentation(std::move(p));
}

// One grouplike K of order l and skew letters h_i in H_{K^a, K^b}.
PresentationPtr random_skew_presentation(Ctx& ctx, unsigned letters, std::uint64_t order) {
  HopfPresentation p;
  p.name = "random_skew";
  p.grouplikes.push_back({"K", order});
  for (unsigned i = 1; i <= letters; ++i) {
    GroupWord g, gp;
    long long a = ctx.pick_int(-2, 2), b = ctx.pick_int(-2, 2);
    if (a != 0) g.emplace_back("K", a);
    if (b != 0) gp.emplace_back("K", b);
    p.skewprims.push_back({"h" + std::to_string(i), std::move(g), std::move(gp)});
  }
  return make_presentation(std::move(p));
}

// Tensor of k copies of H_1 (grouplikes g_i of infinite order, x_i letters).
PresentationPtr tensor_h1(unsigned k) {
  HopfPresentation p;
  p.name = "tensor_h1";
  for (unsigned i = 1; i <= k; ++i) {
    p.grouplikes.push_back({"g" + std::to_string(i), 0});
    p.skewprims.push_back({"x" + std::to_string(i), {{"g" + std::to_string(i), 1}}, {}});
  }
  return make_presentation(std::move(p));
}

// Primitive letters h_1..h_n (Sym of an abelian Lie algebra).
PresentationPtr sym_presentation(unsigned n) {
  HopfPresentation p;
  p.name = "sym";
  for (unsigned i = 1; i <= n; ++i) p.skewprims.push_back({"h" + std::to_string(i), {}, {}});
  return make_presentation(std::move(p));
}

// Grouplike g, one H_{g,1} letter w, plus primitive letters h_1..h_n.  The
// w-block makes the weight group nonabelian.
PresentationPtr mixed_presentation(unsigned n) {
  HopfPresentation p;
  p.name = "mixed";
  p.grouplikes.push_back({"g", 0});
  p.skewprims.push_back({"w", {{"g", 1}}, {}});
  for (unsigned i = 1; i <= n; ++i) p.skewprims.push_back({"h" + std::to_string(i), {}, {}});
  return make_presentation(std::move(p));
}

Character value_character(const PresentationPtr& pres, const FieldPtr& F,
                          const std::map<std::string, FieldElement>& values) {
  return validate_character(pres, F, values);
}

Monomial skew_monomial(const PresentationPtr& pres, const std::vector<std::string>& names) {
  Monomial m;
  for (const auto& n : names) m.letters.push_back({n, 1});
  (void)pres;
  return m;
}

// The A_4-shaped nonabelian group over F_4: translations in the w and h
// directions extended by an order-3 grouplike part.
CharacterGroup nonabelian_char2_group(const PresentationPtr& pres, const FieldPtr& F,
                                      const FieldElement& s, const FieldElement& t1,
                                      const FieldElement& t2) {
  FieldElement omega = F->primitive_root_of_unity(3);
  std::map<std::string, FieldElement> sv{{"g", F->one()}, {"w", s}, {"h1", t1}, {"h2", t2}};
  std::map<std::string, FieldElement> tv{
      {"g", omega}, {"w", F->zero()}, {"h1", F->zero()}, {"h2", F->zero()}};
  Character sigma = value_character(pres, F, sv);
  Character tau = value_character(pres, F, tv);
  return generate_character_group({sigma, tau}, 64);
}

// Suites ------------------------------------------------------------------

SuiteResult suite_phi(Ctx& ctx) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    auto F = Field::make(FieldSpec::prime(p));
    for (std::uint64_t f = 1; f <= 3 * (p - 1); ++f) {
      std::uint64_t f0 = (p == 2) ? 1 : ((f - 1) % (p - 1)) + 1;
      PhiPolynomial g = eulerian_coeffs(f0);
      for (std::uint64_t zv = 0; zv < p; ++zv) {
        FieldElement z = F->from_integer(static_cast<long long>(zv));
        FieldElement direct = varphi_direct(F, f, z);
        FieldElement closed = varphi_closed(F, f, z);
        ctx.check(direct == closed, "phi mismatch p=" + std::to_string(p) +
                                        " f=" + std::to_string(f) + " z=" + std::to_string(zv));
        // Vanishing characterization.
        FieldElement gval = F->zero();
        for (std::size_t i = 0; i < g.coeffs.size(); ++i)
          gval = gval + F->from_integer(g.coeffs[i]) * z.pow(static_cast<long long>(i));
        bool expect_zero =
            z.is_zero() || (z.is_one() && f % (p - 1) != 0) || gval.is_zero();
        ctx.check(direct.is_zero() == expect_zero,
                  "phi vanishing characterization failed p=" + std::to_string(p) +
                      " f=" + std::to_string(f) + " z=" + std::to_string(zv));
      }
    }
    // phi(p-1, 1) = -1 and phi(0, 1) = 0.
    ctx.check(varphi_direct(F, p - 1, F->one()) == -F->one(), "phi(p-1,1) != -1");
    ctx.check(varphi_direct(F, 0, F->one()).is_zero(), "phi(0,1) != 0");
    ctx.check(varphi_direct(F, 0, F->zero()).is_zero(), "phi(0,0) != 0");
    ctx.note("p=" + std::to_string(p));
  }
  // Coefficient integrality and primitive-mod-p property for f0 < 13.
  for (std::uint64_t f0 = 1; f0 < 13; ++f0) {
    PhiPolynomial g = eulerian_coeffs(f0);  // identity asserted internally
    ctx.check(g.coeffs.size() == f0, "wrong coefficient count");
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      if (p <= f0) continue;
      bool all_divisible = true;
      for (const auto& c : g.coeffs)
        if (c % Int(p) != 0) all_divisible = false;
      ctx.check(!all_divisible, "all Eulerian coefficients divisible by p");
    }
  }
  return ctx.result;
}

SuiteResult suite_lnom(Ctx& ctx) {
  auto factorial = [](std::uint64_t n) {
    Int f = 1;
    for (std::uint64_t i = 2; i <= n; ++i) f *= Int(i);
    return f;
  };
  auto exact_multinomial = [&](const std::vector<std::uint64_t>& parts) {
    std::uint64_t n = std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
    Int v = factorial(n);
    for (auto l : parts) v /= factorial(l);
    return v;
  };
  std::vector<std::uint64_t> primes = {2, 3, 5, 7};
  // Exhaustive small cases: all 2- and 3-part compositions with n <= 12.
  for (std::uint64_t p : primes) {
    for (std::uint64_t a = 0; a <= 12; ++a)
      for (std::uint64_t b = 0; a + b <= 12; ++b) {
        std::vector<std::uint64_t> parts{a, b};
        Int exact = exact_multinomial(parts);
        ctx.check(multinomial_mod(p, parts) ==
                      static_cast<std::uint64_t>(exact % Int(p)),
                  "binomial mod mismatch");
        ctx.check(lnom_divisible(p, parts) == (exact % Int(p) == 0), "lemma route mismatch");
      }
  }
  // Random parts up to n = 40, up to 5 parts.
  for (int trial = 0; trial < 300; ++trial) {
    std::uint64_t p = ctx.pick(primes);
    std::size_t k = static_cast<std::size_t>(ctx.pick_int(1, 5));
    std::vector<std::uint64_t> parts;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
      std::uint64_t l = static_cast<std::uint64_t>(ctx.pick_int(0, 12));
      if (total + l > 40) break;
      parts.push_back(l);
      total += l;
    }
    if (parts.empty()) parts.push_back(0);
    Int exact = exact_multinomial(parts);
    ctx.check(multinomial_mod(p, parts) == static_cast<std::uint64_t>(exact % Int(p)),
              "multinomial mod mismatch");
    ctx.check(lnom_divisible(p, parts) == (exact % Int(p) == 0), "lemma route mismatch");
    ctx.note("p=" + std::to_string(p));
  }
  // Binary-digit criterion: mod-2 multinomials are odd iff digit sums carry
  // nowhere, i.e. popcounts add up.
  for (std::uint64_t a = 0; a <= 16; ++a)
    for (std::uint64_t b = 0; b <= 16; ++b)
      for (std::uint64_t c = 0; c <= 8; ++c) {
        std::vector<std::uint64_t> parts{a, b, c};
        std::uint64_t n = a + b + c;
        bool no_carries = (__builtin_popcountll(a) + __builtin_popcountll(b) +
                           __builtin_popcountll(c)) == __builtin_popcountll(n);
        ctx.check((multinomial_mod(2, parts) == 1) == no_carries,
                  "binary digit criterion failed");
      }
  return ctx.result;
}

SuiteResult suite_s0(Ctx& ctx) {
  for (std::uint64_t m = 1; m <= 8; ++m)
    for (std::uint64_t n = 0; n <= 20; ++n) {
      Int s = binomial_skip_sum(n, m);  // internal dual-route assertion
      if (m == 1) ctx.check(s == Int(1) << n, "S_0 at m=1 is not 2^n");
      if (m > n) ctx.check(s == 1, "S_0 with m > n should be 1");
      ctx.note("m=" + std::to_string(m));
    }
  ctx.check(binomial_skip_sum(3, 2) == 4, "S_0(3,2) != 4");
  return ctx.result;
}

SuiteResult suite_t7(Ctx& ctx) {
  // killed_roots against the hand rules for every type/rank and char.
  struct Shape {
    char type;
    unsigned lo, hi;
  };
  std::vector<Shape> shapes = {{'A', 1, 8}, {'B', 2, 8}, {'C', 2, 8}, {'D', 3, 8},
                               {'E', 6, 8}, {'F', 4, 4}, {'G', 2, 2}};
  for (std::uint64_t ch : {0, 2, 3, 5}) {
    for (const auto& shape : shapes)
      for (unsigned rank = shape.lo; rank <= shape.hi; ++rank) {
        RootSystemData data{{{shape.type, rank}}, 0};
        KilledRoots k = killed_roots(data, ch);
        std::vector<bool> expect(rank, true);
        if (ch == 2) {
          if (shape.type == 'A' && rank == 1) expect[0] = false;
          if (shape.type == 'B') expect[rank - 1] = false;
          if (shape.type == 'C' && rank == 2) expect[0] = false;
        }
        ctx.check(k.killed[0] == expect,
                  std::string("killed_roots wrong for ") + shape.type + std::to_string(rank) +
                      " char " + std::to_string(ch));
        ctx.note(std::string(1, shape.type) + "/char" + std::to_string(ch));
      }
  }
  // Weight-group shape.
  auto F0 = Field::make(FieldSpec::rational());
  auto F2 = Field::make(FieldSpec::prime_ext(2, {1, 1, 0, 0, 1}));  // F_16
  {
    WeightGroupDescription d = smash_weights({{{'A', 2}}, 0}, F0);
    ctx.check(!d.weyl_collapsed && d.additive_rank == 0, "A_2 char 0 weight group");
    d = smash_weights({{{'B', 2}}, 0}, F2);
    ctx.check(d.weyl_collapsed && d.additive_rank == 1, "B_2 char 2 weight group");
    d = smash_weights({{{'B', 3}, {'G', 2}}, 2}, F2);
    ctx.check(d.additive_rank == 3, "B_3 + G_2 + center char 2 weight group");
  }
  // Sigma at powers of the short root: closed vs brute for k <= 4, n <= 12.
  FieldElement t = F2->ext_generator();
  std::vector<FieldElement> pool;
  for (int i = 0; i < 4; ++i) pool.push_back(t.pow(i));  // independent over F_2
  for (std::size_t k = 1; k <= 4; ++k) {
    std::vector<FieldElement> gens(pool.begin(), pool.begin() + k);
    for (std::uint64_t n = 1; n <= 12; ++n) {
      SigmaReport r = sigma_alpha_power(gens, n);
      check_report(ctx, r, "alpha power k=" + std::to_string(k) + " n=" + std::to_string(n));
      int weight = __builtin_popcountll(n);
      if (k > static_cast<std::size_t>(weight))
        ctx.check(r.closed->is_zero(), "binary-weight vanishing failed");
    }
  }
  // Random independent tuples as well.
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t k = static_cast<std::size_t>(ctx.pick_int(1, 4));
    std::vector<FieldElement> gens;
    for (std::size_t i = 0; i < k; ++i) {
      FieldElement v = F2->zero();
      while (v.is_zero()) v = ctx.pick(F2->roots_of_unity_dividing(0));
      gens.push_back(v);
    }
    std::uint64_t n = static_cast<std::uint64_t>(ctx.pick_int(1, 12));
    try {
      SigmaReport r = sigma_alpha_power(gens, n);
      check_report(ctx, r, "random alpha power");
    } catch (const Error& e) {
      ctx.check(e.code() == "DependentGenerators", "unexpected error " + std::string(e.what()));
      ctx.note("dependent");
    }
  }
  return ctx.result;
}

SuiteResult suite_tcounter(Ctx& ctx, std::size_t targets) {
  std::vector<FieldSpec> specs = {FieldSpec::cyclotomic(12), FieldSpec::cyclotomic(4),
                                  FieldSpec::prime(101), FieldSpec::prime(103)};
  for (std::uint64_t m : {2, 4, 6}) {
    for (unsigned n = 1; n <= 6; ++n) {
      for (std::size_t t = 0; t < std::max<std::size_t>(1, targets / 18); ++t) {
        const FieldSpec& spec = ctx.pick(specs);
        auto F = Field::make(spec);
        if (!F->try_primitive_root_of_unity(m)) continue;
        if (F->characteristic() > 0 && F->characteristic() <= (1ull << n)) continue;
        FieldElement target = random_small(ctx, F);
        if (t % 3 == 1) target = target * random_root(ctx, F);
        try {
          ConstructionResult r = construct_cyclic(m, n, target);
          ctx.check(r.achieved == target, "cyclic construction missed target");
          ctx.check(r.group.order() == m, "cyclic construction has wrong order");
          ctx.check(element_order(r.group.table, r.group.generator_indices[0]) == m,
                    "generator order wrong");
          ctx.note("m=" + std::to_string(m));
        } catch (const Error& e) {
          ctx.check(false, std::string("construct_cyclic failed: ") + e.what());
        }
      }
    }
  }
  // Error surfaces.
  auto q = Field::make(FieldSpec::rational());
  try {
    construct_cyclic(4, 1, q->one());
    ctx.check(false, "expected NoSuchRoot");
  } catch (const Error& e) {
    ctx.check(e.code() == "NoSuchRoot", "wrong error for missing root");
  }
  auto f5 = Field::make(FieldSpec::prime(5));
  try {
    construct_cyclic(2, 3, f5->one());  // 5 < 2^3
    ctx.check(false, "expected CharTooSmall");
  } catch (const Error& e) {
    ctx.check(e.code() == "CharTooSmall", "wrong error for small characteristic");
  }
  return ctx.result;
}

SuiteResult suite_p5(Ctx& ctx, std::size_t instances, std::size_t max_order) {
  for (std::size_t i = 0; i < instances; ++i) {
    auto F = Field::make(ctx.pick(char0_specs()));
    if (i % 3 == 0) F = Field::make(ctx.pick(charp_specs()));
    PresentationPtr pres = random_group_ring(ctx);
    CharacterGroup pi = random_group(ctx, pres, F, max_order);
    Monomial word;
    for (const auto& g : pres->grouplikes) {
      long long e = ctx.pick_int(-3, 5);
      if (e != 0) word.letters.push_back({g.name, e});
    }
    SigmaReport r = sigma_grouplike(pi, word);
    check_report(ctx, r, "P5 instance " + std::to_string(i));
    // The closed value is |Pi| or 0 according to membership.
    Monomial empty;
    SigmaReport trivial = sigma_grouplike(pi, empty);
    ctx.check(trivial.closed->is_one() ||
                  *trivial.closed ==
                      group_field(pi)->from_integer(static_cast<long long>(pi.order())),
              "Sigma(1) != |Pi|");
  }
  return ctx.result;
}

SuiteResult suite_t3(Ctx& ctx, std::size_t instances, std::size_t max_order) {
  std::size_t with_multiple_witnesses = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    int recipe = static_cast<int>(i % 4);
    PresentationPtr pres;
    FieldPtr F;
    switch (recipe) {
      case 0: {  // skew letter between powers of one grouplike
        F = Field::make(ctx.pick(char0_specs()));
        pres = random_skew_presentation(ctx, 1, ctx.pick(std::vector<std::uint64_t>{3, 4, 6}));
        break;
      }
      case 1: {  // H_1: g' = 1, the case-2 factory
        F = Field::make(ctx.pick(char0_specs()));
        pres = build_hn(1);
        break;
      }
      case 2: {  // characteristic 2, primitive letter (case 3 with content)
        F = Field::make(ctx.pick(std::vector<FieldSpec>{
            FieldSpec::prime(2), FieldSpec::prime_ext(2, {1, 1, 1}),
            FieldSpec::prime_ext(2, {1, 1, 0, 1})}));
        pres = sym_presentation(1);
        break;
      }
      default: {  // mixed characteristic-p
        F = Field::make(ctx.pick(charp_specs()));
        pres = random_skew_presentation(ctx, 1, ctx.pick(std::vector<std::uint64_t>{2, 3, 4}));
        break;
      }
    }
    CharacterGroup pi = random_group(ctx, pres, F, max_order);
    const std::string letter = pres->skewprims[0].name;
    SigmaReport r = sigma_skew(pi, letter);
    check_report(ctx, r, "T3 instance " + std::to_string(i));
    if (r.path == "T3.case2" && r.witnesses.size() >= 2) ++with_multiple_witnesses;
  }
  ctx.check(ctx.result.tally.count("T3.case1") > 0, "case 1 never fired");
  ctx.check(ctx.result.tally.count("T3.case2") > 0, "case 2 never fired");
  bool case3 = ctx.result.tally.count("T3.case3") || ctx.result.tally.count("Tunproved.order2") ||
               ctx.result.tally.count("Tunproved.div4") || ctx.result.tally.count("Tunproved.odd");
  ctx.check(case3, "case 3 never fired");
  ctx.note("multi-witness instances: " + std::to_string(with_multiple_witnesses));
  ctx.check(with_multiple_witnesses > 0, "witness independence never exercised twice");
  return ctx.result;
}

SuiteResult suite_e3e4(Ctx& ctx, std::size_t instances, std::size_t max_order) {
  for (std::size_t i = 0; i < instances; ++i) {
    PresentationPtr pres;
    FieldPtr F;
    Monomial m;
    if (i % 3 == 0) {
      F = Field::make(ctx.pick(char0_specs()));
      pres = build_hn(2);
      m = skew_monomial(pres, {"h1", "h2"});
    } else if (i % 3 == 1) {
      F = Field::make(ctx.pick(char0_specs()));
      pres = random_skew_presentation(ctx, 1, ctx.pick(std::vector<std::uint64_t>{3, 4, 6}));
      m = skew_monomial(pres, {pres->skewprims[0].name});
    } else {
      F = Field::make(ctx.pick(charp_specs()));
      pres = random_skew_presentation(ctx, 2, ctx.pick(std::vector<std::uint64_t>{2, 3, 4}));
      m = skew_monomial(pres, {"h1", "h2"});
    }
    CharacterGroup pi = random_group(ctx, pres, F, max_order);
    for (const auto& checkres : verify_convolution_identities(pi, m)) {
      ctx.check(checkres.pass, checkres.name + " failed: " + checkres.detail);
      ctx.note(checkres.name);
    }
  }
  return ctx.result;
}

SuiteResult suite_l1(Ctx& ctx, std::size_t instances, std::size_t max_order) {
  std::size_t resample_runs = 0;
  for (std::size_t i = 0; i < instances; ++i) {
    FieldPtr F = Field::make(i % 2 ? ctx.pick(char0_specs()) : ctx.pick(charp_specs()));
    PresentationPtr pres = (i % 3 == 0) ? build_hn(2) : random_skew_presentation(ctx, 2, 4);
    CharacterGroup pi = random_group(ctx, pres, F, max_order);
    Monomial m;
    if (i % 2 == 0) {
      m = skew_monomial(pres, {pres->skewprims[0].name});
    } else {
      m = skew_monomial(pres, {pres->skewprims[0].name, pres->skewprims[1].name});
    }
    StabilizerResult stab = stabilizer_in_pi(pi, m);
    // Candidate normal subgroups inside the stabilizer.
    std::vector<std::vector<std::size_t>> candidates;
    candidates.push_back({0});
    candidates.push_back(stab.stabilizer);
    if (stab.stabilizer.size() > 1)
      candidates.push_back(subgroup_closure(pi.table, {ctx.pick(stab.stabilizer)}));
    for (const auto& n : candidates) {
      if (!is_normal(pi.table, n)) continue;
      SigmaReport r = sigma_via_quotient(pi, n, m, &ctx.rng, 5);
      check_report(ctx, r, "L1 instance " + std::to_string(i));
      ++resample_runs;
    }
  }
  ctx.note("quotient reductions: " + std::to_string(resample_runs));
  return ctx.result;
}

SuiteResult suite_pstab(Ctx& ctx, std::size_t instances, std::size_t max_order) {
  for (std::size_t i = 0; i < instances; ++i) {
    unsigned k = static_cast<unsigned>(ctx.pick_int(2, 3));
    PresentationPtr pres = tensor_h1(k);
    FieldPtr F = Field::make(ctx.pick(char0_specs()));
    std::vector<Character> gens;
    bool degenerate = (i % 5 == 0);
    for (unsigned b = 1; b <= k; ++b) {
      if (degenerate && b == 1) continue;  // leave factor 1 trivial
      std::map<std::string, FieldElement> values;
      FieldElement z = random_root(ctx, F);
      for (unsigned j = 1; j <= k; ++j) {
        values.emplace("g" + std::to_string(j), j == b ? z : F->one());
        values.emplace("x" + std::to_string(j),
                       j == b ? (z.is_one() ? F->zero() : random_small(ctx, F)) : F->zero());
      }
      gens.push_back(value_character(pres, F, values));
    }
    if (gens.empty()) continue;
    CharacterGroup pi;
    try {
      pi = generate_character_group(gens, max_order);
    } catch (const Error& e) {
      if (e.code() == "CapExceeded") continue;
      throw;
    }
    std::vector<std::vector<std::size_t>> factors;
    std::size_t gi = 0;
    for (unsigned b = 1; b <= k; ++b) {
      if (degenerate && b == 1) {
        factors.push_back({0});
      } else {
        factors.push_back(subgroup_closure(pi.table, {pi.generator_indices[gi]}));
        ++gi;
      }
    }
    Monomial letters;
    for (unsigned b = 1; b <= k; ++b) letters.letters.push_back({"x" + std::to_string(b), 1});
    SigmaReport r = sigma_direct_product(pi, factors, letters);
    check_report(ctx, r, "Pstab instance " + std::to_string(i));
    if (degenerate) ctx.check(r.closed->is_zero(), "trivial factor should zero the product");
  }
  return ctx.result;
}

SuiteResult suite_p8(Ctx& ctx, std::size_t instances, std::size_t max_order) {
  for (std::size_t i = 0; i < instances; ++i) {
    // h in H_{K,K} over F_p: pseudo-primitive with nontrivial grouplike value.
    auto F = Field::make(ctx.pick(std::vector<FieldSpec>{
        FieldSpec::prime(5), FieldSpec::prime(7), FieldSpec::prime_ext(3, {1, 0, 1})}));
    HopfPresentation hp;
    hp.name = "pseudo";
    hp.grouplikes.push_back({"K", 0});
    hp.skewprims.push_back({"h", {{"K", 1}}, {{"K", 1}}});
    auto pres = make_presentation(std::move(hp));
    std::map<std::string, FieldElement> values{{"K", random_root(ctx, F)},
                                               {"h", random_small(ctx, F)}};
    Character gamma = value_character(pres, F, values);
    CharacterGroup pi;
    try {
      pi = generate_character_group({gamma}, max_order);
    } catch (const Error& e) {
      if (e.code() == "CapExceeded") continue;
      throw;
    }
    Monomial h = skew_monomial(pres, {"h"});
    // P8(1): convolution is symmetric at h with the two-sided g-value rule.
    for (std::size_t a = 0; a < pi.order(); ++a)
      for (std::size_t b = 0; b < pi.order(); ++b) {
        const Character &x = pi.elements[a], &y = pi.elements[b];
        FieldElement expect =
            y.value("K") * x.value("h") + x.value("K") * y.value("h");
        ctx.check(convolve(x, y).value("h") == expect, "P8(1) failed");
        ctx.check(convolve(y, x).value("h") == expect, "P8(1) symmetry failed");
      }
    // P8(3): gamma^{*m}(h) = m gamma(g)^{m-1} gamma(h).
    Character power = counit(pres, F);
    for (int m = 0; m <= 2 * static_cast<int>(pi.order()); ++m) {
      FieldElement expect =
          F->from_integer(m) * gamma.value("K").pow(m - 1) * gamma.value("h");
      ctx.check(power.eval(h) == expect, "P8(3) failed at m=" + std::to_string(m));
      power = convolve(power, gamma);
    }
    ctx.note("order=" + std::to_string(pi.order()));
  }
  // P8(2): [Pi,Pi] inside the fixed-weight monoid of a pseudo-primitive
  // letter, on a nonabelian example.
  {
    auto F = Field::make(FieldSpec::prime_ext(2, {1, 1, 1}));
    auto pres = mixed_presentation(2);
    CharacterGroup pi = nonabelian_char2_group(pres, F, F->one(), F->ext_generator(), F->one());
    ctx.check(!is_abelian(pi.table), "expected a nonabelian group");
    auto comm = commutator_subgroup(pi.table);
    ctx.check(comm.size() > 1, "expected a nontrivial commutator subgroup");
    Monomial m = skew_monomial(pres, {"h1"});
    auto stab = stabilizer_in_pi(pi, m);
    for (std::size_t c : comm) {
      ctx.check(std::binary_search(stab.fixed_monoid->begin(), stab.fixed_monoid->end(), c),
                "commutator element not in the fixed monoid");
    }
  }
  return ctx.result;
}

SuiteResult suite_tskew(Ctx& ctx, std::size_t instances, std::size_t max_order) {
  for (std::size_t i = 0; i < instances; ++i) {
    auto F = Field::make(ctx.pick(charp_specs()));
    std::uint64_t p = F->characteristic();
    PresentationPtr pres = (i % 2 == 0) ? random_skew_presentation(ctx, 2, 4) : build_hn(2);
    CharacterGroup pi = random_group(ctx, pres, F, max_order);
    // (1) every skew letter is almost primitive with respect to Pi_p.
    if (pi.order() % p == 0) {
      auto sylow = sylow_subgroup(pi.table, p);
      for (std::size_t idx : sylow)
        for (const auto& s : pres->skewprims) {
          ctx.check(pi.elements[idx].eval_word(s.g).is_one() &&
                        pi.elements[idx].eval_word(s.gp).is_one(),
                    "Tskew(1): Sylow character moves a grouplike word");
        }
      // Structural fact: Sylow subgroups of weight groups of pointed
      // presentations have exponent p, so the order-p^2 branch never fires
      // on realizable instances.
      for (std::size_t idx : sylow)
        ctx.check(element_order(pi.table, idx) == 1 || element_order(pi.table, idx) == p,
                  "unexpected p^2 element in a weight group");
    }
    // Dispatch stays consistent on products.
    Monomial m = skew_monomial(pres, {pres->skewprims[0].name, pres->skewprims[1].name});
    SigmaReport r = sigma_product_general(pi, m);
    check_report(ctx, r, "Tskew dispatch instance");
  }
  // The order-p^2 detector on a synthetic table (Z/9).
  {
    auto mul = [](int a, int b) { return (a + b) % 9; };
    auto inv = [](int a) { return (9 - a) % 9; };
    auto key = [](int a) { return std::to_string(a); };
    auto c9 = close_group<int>({1}, mul, inv, key, 10);
    auto sylow = sylow_subgroup(c9.table, 3);
    bool found = false;
    for (std::size_t idx : sylow)
      if (element_order(c9.table, idx) == 9) found = true;
    ctx.check(found, "synthetic Z/9 detector failed");
    ctx.note("synthetic.p2");
  }
  return ctx.result;
}

SuiteResult suite_abelian(Ctx& ctx, std::size_t instances, std::size_t max_order) {
  for (std::size_t i = 0; i < instances; ++i) {
    FieldPtr F;
    PresentationPtr pres;
    if (i % 2 == 0) {
      F = Field::make(ctx.pick(charp_specs()));
      pres = (i % 4 == 0) ? mixed_presentation(1) : random_skew_presentation(ctx, 2, 3);
    } else {
      F = Field::make(ctx.pick(char0_specs()));
      pres = (i % 3 == 0) ? build_hn(2) : random_skew_presentation(ctx, 2, 4);
    }
    CharacterGroup pi = random_group(ctx, pres, F, max_order);
    if (!is_abelian(pi.table)) continue;
    std::vector<std::string> names;
    for (const auto& s : pres->skewprims) names.push_back(s.name);
    if (names.size() > 2) names.resize(2);
    Monomial m = skew_monomial(pres, names);
    SigmaReport split = sigma_abelian_split(pi, m);
    check_report(ctx, split, "abelian split instance " + std::to_string(i));
    SigmaReport dispatch = sigma_product_general(pi, m);
    check_report(ctx, dispatch, "abelian dispatch instance " + std::to_string(i));
  }
  return ctx.result;
}

SuiteResult suite_tabel(Ctx& ctx, std::size_t instances, std::size_t max_order) {
  for (std::size_t i = 0; i < instances; ++i) {
    FieldPtr F = Field::make(ctx.pick(char0_specs()));
    unsigned n = static_cast<unsigned>(ctx.pick_int(1, 3));
    PresentationPtr pres = build_hn(n);
    CharacterGroup pi = random_group(ctx, pres, F, max_order, 1);
    std::uint64_t p = F->characteristic();
    if (p > 0 && pi.order() % p == 0) continue;
    std::vector<std::string> names;
    for (const auto& s : pres->skewprims) names.push_back(s.name);
    Monomial m = skew_monomial(pres, names);
    bool has_pseudo = false;
    for (const auto& name : names)
      if (letter_is_pseudo_primitive(pi, name)) has_pseudo = true;
    if (has_pseudo) {
      try {
        sigma_abelian_closed(pi, m);
        ctx.check(false, "expected PseudoPrimitiveLetter");
      } catch (const Error& e) {
        ctx.check(e.code() == "PseudoPrimitiveLetter", "wrong error");
      }
      continue;
    }
    SigmaReport r = sigma_abelian_closed(pi, m);
    check_report(ctx, r, "Tabel instance " + std::to_string(i));
    // Level witnesses are interchangeable inside an abelian group.
    for (const auto& name : names) {
      const SkewGen* sk = pres->find_skew(name);
      std::optional<FieldElement> level;
      for (const auto& chi : pi.elements) {
        if (chi.eval_word(sk->g) == chi.eval_word(sk->gp)) continue;
        FieldElement f = level_function(chi, name);
        if (!level)
          level = f;
        else
          ctx.check(*level == f, "level function depends on the witness");
      }
    }
  }
  return ctx.result;
}

SuiteResult suite_t5t6t8(Ctx& ctx, std::size_t instances, std::size_t max_order) {
  (void)max_order;
  std::vector<std::pair<std::uint64_t, FieldSpec>> fields = {
      {2, FieldSpec::prime_ext(2, {1, 1, 1})},
      {2, FieldSpec::prime_ext(2, {1, 1, 0, 0, 1})},
      {3, FieldSpec::prime_ext(3, {1, 0, 1})},
      {3, FieldSpec::prime(3)}};
  std::size_t reps = std::max<std::size_t>(1, instances / 36);
  for (const auto& [p, spec] : fields) {
    auto F = Field::make(spec);
    for (unsigned k = 1; k <= 3; ++k) {
      for (unsigned n = 1; n <= 6; ++n) {
        for (std::size_t rep = 0; rep < reps; ++rep) {
          PresentationPtr pres = sym_presentation(n);
          std::vector<Character> gens;
          CharacterGroup pi;
          bool ok = false;
          for (int attempt = 0; attempt < 30 && !ok; ++attempt) {
            gens.clear();
            for (unsigned j = 0; j < k; ++j) {
              std::map<std::string, FieldElement> values;
              for (unsigned i = 1; i <= n; ++i) {
                FieldElement v = (ctx.pick_int(0, 2) == 0) ? F->zero()
                                                           : ctx.pick(F->roots_of_unity_dividing(0));
                values.emplace("h" + std::to_string(i), v);
              }
              gens.push_back(value_character(pres, F, values));
            }
            try {
              pi = generate_character_group(gens, 4096);
              std::uint64_t expect = 1;
              for (unsigned j = 0; j < k; ++j) expect *= p;
              ok = (pi.order() == expect);
            } catch (const Error& e) {
              if (e.code() != "CapExceeded") throw;
            }
          }
          if (!ok) continue;
          std::vector<std::string> names;
          for (unsigned i = 1; i <= n; ++i) names.push_back("h" + std::to_string(i));
          Monomial m = skew_monomial(pres, names);
          SigmaReport r = sigma_pseudo_charp(pi, m);
          check_report(ctx, r, "T5T6T8 p=" + std::to_string(p) + " k=" + std::to_string(k) +
                                   " n=" + std::to_string(n));
          if (n % (p - 1) != 0)
            ctx.check(r.closed->is_zero(), "(p-1) does not divide n but Sigma != 0");
          if (k == n && p == 2) {
            std::vector<std::vector<FieldElement>> a(n, std::vector<FieldElement>(k));
            for (unsigned i = 0; i < n; ++i)
              for (unsigned j = 0; j < k; ++j)
                a[i][j] = gens[j].value("h" + std::to_string(i + 1));
            ctx.check(*r.closed == permanent(a), "k=n value is not the permanent");
            ctx.check(*r.closed == determinant(a), "k=n value is not det in char 2");
          }
        }
      }
    }
  }
  // Nonabelian zero path: the A_4-shaped group in characteristic 2.
  {
    auto F = Field::make(FieldSpec::prime_ext(2, {1, 1, 1}));
    auto pres = mixed_presentation(2);
    CharacterGroup pi =
        nonabelian_char2_group(pres, F, F->one(), F->ext_generator(), F->one() + F->ext_generator());
    Monomial m = skew_monomial(pres, {"h1", "h2"});
    SigmaReport r = sigma_pseudo_charp(pi, m);
    check_report(ctx, r, "nonabelian zero path");
    ctx.check(r.closed->is_zero() && r.path == "T6.meets_commutator",
              "expected the commutator-meeting zero path, got " + r.path);
  }
  return ctx.result;
}

SuiteResult suite_ppower(Ctx& ctx, std::size_t instances, std::size_t max_order) {
  auto F = Field::make(FieldSpec::cyclotomic(12));
  auto pres = build_hn(2);
  std::size_t cap = max_order ? max_order : 64;
  for (std::size_t i = 0; i < instances; ++i) {
    CharacterGroup pi = random_group(ctx, pres, F, cap);
    std::size_t pairs = 0;
    for (std::size_t a = 1; a < pi.order() && pairs < 40; ++a) {
      for (std::size_t b = 1; b < pi.order() && pairs < 40; ++b) {
        if (pi.table.mul(a, b) != pi.table.mul(b, a)) continue;
        FieldElement za = pi.elements[a].value("g");
        FieldElement zb = pi.elements[b].value("g");
        if (za.is_one() || zb.is_one()) continue;
        std::size_t oa = element_order(pi.table, a), ob = element_order(pi.table, b);
        for (std::size_t ma = 1; ma <= oa; ++ma)
          for (std::size_t mb = 1; mb <= ob; ++mb) {
            if (za.pow(static_cast<long long>(ma)) != zb.pow(static_cast<long long>(mb))) continue;
            // table powers
            std::size_t xa = 0, xb = 0;
            for (std::size_t t = 0; t < ma; ++t) xa = pi.table.mul(xa, a);
            for (std::size_t t = 0; t < mb; ++t) xb = pi.table.mul(xb, b);
            ctx.check(xa == xb, "Ppower: z-powers agree but characters differ");
            ++pairs;
          }
      }
    }
    ctx.note("pairs:" + std::to_string(pairs));
  }
  return ctx.result;
}

SuiteResult suite_tsk(Ctx& ctx, std::size_t instances, std::size_t max_order) {
  std::size_t cap = max_order ? max_order : 64;
  // Characteristic zero: every finite abelian subgroup is cyclic of order
  // prime to ch(R) = 0.
  {
    auto F = Field::make(FieldSpec::cyclotomic(12));
    auto pres = build_hn(2);
    for (std::size_t i = 0; i < instances; ++i) {
      CharacterGroup pi = random_group(ctx, pres, F, cap);
      if (!is_abelian(pi.table)) continue;
      bool cyclic = false;
      for (std::size_t a = 0; a < pi.order(); ++a)
        if (element_order(pi.table, a) == pi.order()) cyclic = true;
      ctx.check(cyclic, "char-0 abelian subgroup is not cyclic");
      ctx.note("char0 order=" + std::to_string(pi.order()));
    }
  }
  // Characteristic p: cyclic prime to p, or elementary abelian inside the
  // translation block (all grouplike values 1).
  {
    auto F = Field::make(FieldSpec::prime(7));
    auto pres = build_hn(2);
    for (std::size_t i = 0; i < instances; ++i) {
      CharacterGroup pi = random_group(ctx, pres, F, cap);
      if (!is_abelian(pi.table)) continue;
      bool cyclic_coprime = false;
      for (std::size_t a = 0; a < pi.order(); ++a)
        if (element_order(pi.table, a) == pi.order() && pi.order() % 7 != 0) cyclic_coprime = true;
      bool translations = true;
      for (const auto& chi : pi.elements)
        if (!chi.value("g").is_one()) translations = false;
      bool elementary = translations;
      if (translations)
        for (std::size_t a = 1; a < pi.order(); ++a)
          if (element_order(pi.table, a) != 7) elementary = false;
      ctx.check(cyclic_coprime || elementary || pi.order() == 1,
                "char-p abelian subgroup violates the dichotomy");
      ctx.note("char7 order=" + std::to_string(pi.order()));
    }
  }
  return ctx.result;
}

SuiteResult suite_qexamples(Ctx& ctx) {
  // Group ring divisibility law.
  for (std::uint64_t l : {2, 3, 4, 6}) {
    auto F = Field::make(FieldSpec::cyclotomic(l));
    auto pres = build_group_ring(1, l);
    std::map<std::string, FieldElement> values{{"K1", F->primitive_root_of_unity(l)}};
    CharacterGroup pi = generate_character_group({value_character(pres, F, values)}, 64);
    ctx.check(pi.order() == l, "full dual has wrong order");
    for (long long mexp = 0; mexp <= 2 * static_cast<long long>(l); ++mexp) {
      Monomial word;
      if (mexp) word.letters.push_back({"K1", mexp});
      SigmaReport r = sigma_grouplike(pi, word);
      check_report(ctx, r, "group ring word");
      bool divisible = (mexp % static_cast<long long>(l)) == 0;
      ctx.check(r.closed->is_zero() == !divisible, "group-ring divisibility law failed");
    }
  }
  // u_{q,l} weight-group order law: 2^n for even l, 1 for odd l.
  for (unsigned n = 1; n <= 3; ++n) {
    for (std::uint64_t l : {2, 3, 4, 5, 6}) {
      auto F = Field::make(FieldSpec::cyclotomic(l));
      auto chars = enumerate_characters(build_uql(n, l), F, l);
      std::size_t expect = (l % 2 == 0) ? (std::size_t{1} << n) : 1;
      ctx.check(chars.size() == expect,
                "uql order law failed at n=" + std::to_string(n) + " l=" + std::to_string(l));
      auto borel = enumerate_characters(build_borel(n, l), F, l);
      std::size_t ln = 1;
      for (unsigned i = 0; i < n; ++i) ln *= static_cast<std::size_t>(l);
      ctx.check(borel.size() == ln, "Borel weight count failed");
      auto affine = enumerate_characters(build_affine_space(n, l), F, l);
      ctx.check(affine.size() == ln, "affine-space weight count failed");
      ctx.note("uql n=" + std::to_string(n));
    }
  }
  // Virasoro divisibility.
  {
    auto F = Field::make(FieldSpec::cyclotomic(3));
    auto pres = build_virasoro({-1, 2});
    std::map<std::string, FieldElement> values{{"T", F->zeta()}};
    CharacterGroup pi = generate_character_group({value_character(pres, F, values)}, 16);
    ctx.check(pi.order() == 3, "Virasoro group order");
    for (long long mexp = 0; mexp <= 12; ++mexp) {
      Monomial word;
      if (mexp) word.letters.push_back({"T", mexp});
      SigmaReport r = sigma_virasoro(pi, word);
      check_report(ctx, r, "Virasoro word");
      ctx.check(r.closed->is_zero() == (mexp % 3 != 0), "Virasoro divisibility law failed");
    }
    Monomial with_c;
    with_c.letters.push_back({"T", 6});
    with_c.letters.push_back({"c", 1});
    SigmaReport r = sigma_virasoro(pi, with_c);
    ctx.check(r.closed->is_zero() && r.brute->is_zero(), "words containing c must vanish");
  }
  // Quantum GL/SL.
  {
    auto F = Field::make(FieldSpec::cyclotomic(3));
    auto gl = build_quantum_gl(2);
    std::map<std::string, FieldElement> values{{"u11", F->zeta()}, {"u22", F->one()}};
    CharacterGroup pi = generate_character_group({value_character(gl, F, values)}, 16);
    for (long long e = 1; e <= 6; ++e) {
      Monomial word;
      word.letters.push_back({"u11", e});
      SigmaReport r = sigma_grouplike(pi, word);
      check_report(ctx, r, "GL diagonal word");
      ctx.check(r.closed->is_zero() == (e % 3 != 0), "GL divisibility failed");
    }
    Monomial off;
    off.letters.push_back({"u11", 1});
    off.letters.push_back({"u12", 1});
    ctx.check(sigma_brute(pi, off).is_zero(), "off-diagonal word should vanish");

    auto sl = build_quantum_sl(2);
    std::map<std::string, FieldElement> good{{"u11", F->zeta()}, {"u22", F->zeta().pow(2)}};
    try {
      value_character(sl, F, good);
      ctx.check(true, "");
    } catch (const Error&) {
      ctx.check(false, "SL character with u22 = u11^{-1} rejected");
    }
    std::map<std::string, FieldElement> bad{{"u11", F->zeta()}, {"u22", F->zeta()}};
    try {
      value_character(sl, F, bad);
      ctx.check(false, "SL character violating the determinant relation accepted");
    } catch (const Error& e) {
      ctx.check(e.code() == "ConstraintViolated", "wrong SL rejection");
    }
  }
  // Graded evaluation.
  {
    auto F = Field::make(FieldSpec::cyclotomic(4));
    auto pres = build_group_ring(1, 4);
    std::map<std::string, FieldElement> values{{"K1", F->zeta()}};
    CharacterGroup pi = generate_character_group({value_character(pres, F, values)}, 16);
    GradedElement elem;
    elem.grouplike_terms.push_back({GroupWord{}, F->from_integer(2)});
    elem.grouplike_terms.push_back({GroupWord{{"K1", 1}}, F->from_integer(3)});
    elem.has_hvh_terms = true;
    SigmaReport r = sigma_graded(pi, elem);
    check_report(ctx, r, "graded element");
    ctx.check(*r.closed == F->from_integer(8), "graded closed value should be 8");
    GradedElement hvh_only;
    hvh_only.has_hvh_terms = true;
    SigmaReport r2 = sigma_graded(pi, hvh_only);
    ctx.check(r2.closed->is_zero() && r2.brute->is_zero(), "HVH-only element should vanish");
  }
  return ctx.result;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"P5",     "T3",  "E3E4", "L1", "Pstab",    "P8",     "Tskew", "abelian", "Tabel",
          "T5T6T8", "phi", "Lnom", "S0", "Tcounter", "Ppower", "Tsk",   "T7",      "qexamples"};
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  Ctx ctx(name, opts.seed);
  std::size_t n = opts.instances;
  std::size_t cap = opts.max_order ? opts.max_order : 128;
  if (name == "phi") return suite_phi(ctx);
  if (name == "Lnom") return suite_lnom(ctx);
  if (name == "S0") return suite_s0(ctx);
  if (name == "T7") return suite_t7(ctx);
  if (name == "Tcounter") return suite_tcounter(ctx, n ? n : 36);
  if (name == "P5") return suite_p5(ctx, n ? n : 200, cap);
  if (name == "T3") return suite_t3(ctx, n ? n : 200, opts.max_order ? opts.max_order : 64);
  if (name == "E3E4") return suite_e3e4(ctx, n ? n : 200, opts.max_order ? opts.max_order : 48);
  if (name == "L1") return suite_l1(ctx, n ? n : 50, opts.max_order ? opts.max_order : 48);
  if (name == "Pstab") return suite_pstab(ctx, n ? n : 60, opts.max_order ? opts.max_order : 64);
  if (name == "P8") return suite_p8(ctx, n ? n : 40, opts.max_order ? opts.max_order : 64);
  if (name == "Tskew") return suite_tskew(ctx, n ? n : 60, opts.max_order ? opts.max_order : 48);
  if (name == "abelian")
    return suite_abelian(ctx, n ? n : 80, opts.max_order ? opts.max_order : 48);
  if (name == "Tabel") return suite_tabel(ctx, n ? n : 80, opts.max_order ? opts.max_order : 48);
  if (name == "T5T6T8") return suite_t5t6t8(ctx, n ? n : 72, cap);
  if (name == "Ppower") return suite_ppower(ctx, n ? n : 40, opts.max_order);
  if (name == "Tsk") return suite_tsk(ctx, n ? n : 40, opts.max_order);
  if (name == "qexamples") return suite_qexamples(ctx);
  fail("UnknownSuite", "no suite named " + name);
}

}  // namespace weightsum
