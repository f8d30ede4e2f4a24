#include "weightsum/constructions.hpp"

#include <numeric>

#include "weightsum/modular.hpp"

namespace weightsum {

PresentationPtr build_hn(unsigned n) {
  HopfPresentation p;
  p.name = "hn";
  p.grouplikes.push_back({"g", 0});
  for (unsigned i = 1; i <= n; ++i)
    p.skewprims.push_back({"h" + std::to_string(i), {{"g", 1}}, {}});
  return make_presentation(std::move(p));
}

namespace {

PresentationPtr build_sym(unsigned n) {
  HopfPresentation p;
  p.name = "sym";
  for (unsigned i = 1; i <= n; ++i) p.skewprims.push_back({"h" + std::to_string(i), {}, {}});
  return make_presentation(std::move(p));
}

ConstructionResult finish(PresentationPtr pres, CharacterGroup group, Monomial monomial,
                          const FieldElement& target) {
  ConstructionResult result;
  result.presentation = std::move(pres);
  result.group = std::move(group);
  result.monomial = std::move(monomial);
  result.target = target;
  result.achieved = sigma_brute(result.group, result.monomial);
  require(result.achieved == target, "InternalError",
          "construction missed its target: got " + result.achieved.to_string());
  return result;
}

}  // namespace

ConstructionResult construct_lie(unsigned n, unsigned k, const FieldElement& r) {
  const FieldPtr& F = r.field();
  std::uint64_t p = F->characteristic();
  require(p > 0, "WrongCharacteristic", "the Lie construction needs characteristic p > 0");
  require(n >= 1 && k >= 1, "BadShape", "need n, k >= 1");
  require(n % (p - 1) == 0, "BadShape", "(p-1) must divide n");
  require(static_cast<std::uint64_t>(k) * (p - 1) <= n, "BadShape", "need k <= n/(p-1)");
  bool square_case = (p == 2 && k == n);
  if (square_case)
    require(!r.is_zero(), "ZeroTargetDisallowed",
            "r = 0 breaks independence of the characters when n = k, p = 2");

  PresentationPtr pres = build_sym(n);
  // Partition [n]: I_1 = {1..n-(k-1)(p-1)}, |I_j| = p-1 afterwards.
  std::size_t first_block = n - static_cast<std::size_t>(k - 1) * (p - 1);
  FieldElement r_prime = (k % 2 == 1) ? -r : r;  // Sigma comes out as (-1)^k r'

  std::vector<Character> gens;
  std::size_t start = 0;
  for (unsigned j = 0; j < k; ++j) {
    std::size_t len = (j == 0) ? first_block : (p - 1);
    std::map<std::string, FieldElement> values;
    for (unsigned i = 1; i <= n; ++i) values.emplace("h" + std::to_string(i), F->zero());
    for (std::size_t t = start; t < start + len; ++t) {
      std::string name = "h" + std::to_string(t + 1);
      values[name] = (t == 0) ? r_prime : F->one();
    }
    gens.push_back(validate_character(pres, F, values));
    start += len;
  }

  CharacterGroup group = generate_character_group(gens, 4096);
  std::uint64_t expected = 1;
  for (unsigned j = 0; j < k; ++j) expected *= p;
  require(group.order() == expected, "BadShape", "characters failed to be independent");

  Monomial m;
  for (unsigned i = 1; i <= n; ++i) m.letters.push_back({"h" + std::to_string(i), 1});
  return finish(std::move(pres), std::move(group), std::move(m), r);
}

ConstructionResult construct_cyclic(std::uint64_t m, unsigned n, const FieldElement& r) {
  const FieldPtr& F = r.field();
  require(m >= 2 && m % 2 == 0, "InvalidSpec", "the cyclic construction needs even m");
  require(n >= 1, "InvalidSpec", "need n >= 1");
  std::uint64_t p = F->characteristic();
  if (p > 0) {
    require(n < 63, "InvalidSpec", "n beyond desk scale");
    require(p > (1ull << n), "CharTooSmall", "need ch(R) > 2^n");
  }
  FieldElement zeta = F->primitive_root_of_unity(m);

  Int s = 0;
  for (std::uint64_t j = 0; m * j <= n; ++j) s += binomial(n, m * j);
  FieldElement sm = F->from_integer(s * Int(m));
  FieldElement a1 = r * sm.inverse() * (F->one() - zeta).pow(n);

  PresentationPtr pres = build_hn(n);
  std::map<std::string, FieldElement> values;
  values.emplace("g", zeta);
  for (unsigned i = 1; i <= n; ++i)
    values.emplace("h" + std::to_string(i), i == 1 ? a1 : F->one());
  Character gen = validate_character(pres, F, values);
  CharacterGroup group = generate_character_group({gen}, 4096);
  require(group.order() == m, "InternalError", "cyclic group has wrong order");

  Monomial mono;
  for (unsigned i = 1; i <= n; ++i) mono.letters.push_back({"h" + std::to_string(i), 1});
  return finish(std::move(pres), std::move(group), std::move(mono), r);
}

ConstructionResult construct_abelian(const std::vector<std::uint64_t>& d, unsigned n,
                                     const FieldElement& r) {
  const FieldPtr& F = r.field();
  require(F->characteristic() == 0, "CharTooSmall",
          "the abelian construction is implemented over characteristic zero");
  require(!d.empty() && n >= 1, "BadChain", "need a nonempty chain and n >= 1");
  for (auto di : d) require(di >= 2, "BadChain", "invariant factors must be >= 2");
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    require(d[i + 1] % d[i] == 0, "BadChain", "need d_1 | d_2 | ... | d_k");
  std::size_t k = d.size();
  std::uint64_t dk = d.back();
  if (n >= k) {
    require(dk % 2 == 0, "BadChain", "the repeated-letter case needs even exponent d_k");
    require(k >= 2 || n == k, "BadShape",
            "k = 1 < n leaves no linear coefficient; use the cyclic construction");
  }
  FieldElement zeta = F->primitive_root_of_unity(dk);
  std::uint64_t order = 1;
  for (auto di : d) order *= di;

  auto zeta_i = [&](std::size_t i) { return zeta.pow(static_cast<long long>(dk / d[i])); };

  if (n >= k) {
    // H = H_1 tensor ... tensor H_1 (k factors g_i, x_i); letters
    // x_1..x_{k-1} then x_k repeated n-k+1 times.
    HopfPresentation hp;
    hp.name = "abelian_tensor";
    for (std::size_t i = 1; i <= k; ++i) {
      hp.grouplikes.push_back({"g" + std::to_string(i), 0});
      hp.skewprims.push_back(
          {"x" + std::to_string(i), {{"g" + std::to_string(i), 1}}, {}});
    }
    PresentationPtr pres = make_presentation(std::move(hp));

    // Solve for a_1 in
    //   Sigma = (-1)^n |Pi| prod_{i<k} a_i/(zeta_i - 1) (a_k/(zeta-1))^{n-k+1} |S|
    // with a_2 = ... = a_k = 1 and |S| = sum_j C(n-k+1, d_k j).
    Int s_count = 0;
    for (std::uint64_t j = 0; dk * j <= n - k + 1; ++j) s_count += binomial(n - k + 1, dk * j);
    FieldElement rest = F->from_integer(Int(order) * s_count);
    if (n % 2 == 1) rest = -rest;
    for (std::size_t i = 1; i < k; ++i) {
      FieldElement denom = zeta_i(i) - F->one();
      long long reps = (i + 1 == k) ? static_cast<long long>(n - k + 1) : 1;
      rest = rest * (F->one() / denom).pow(reps);
    }
    FieldElement a1 = r * (zeta_i(0) - F->one()) / rest;

    std::vector<Character> gens;
    for (std::size_t i = 0; i < k; ++i) {
      std::map<std::string, FieldElement> values;
      for (std::size_t j = 1; j <= k; ++j) {
        values.emplace("g" + std::to_string(j), i + 1 == j ? zeta_i(i) : F->one());
        values.emplace("x" + std::to_string(j),
                       i + 1 == j ? (i == 0 ? a1 : F->one()) : F->zero());
      }
      gens.push_back(validate_character(pres, F, values));
    }
    CharacterGroup group = generate_character_group(gens, 4096);
    require(group.order() == order, "InternalError", "abelian group has wrong order");

    Monomial mono;
    for (std::size_t i = 1; i < k; ++i) mono.letters.push_back({"x" + std::to_string(i), 1});
    for (std::size_t i = k; i <= n; ++i)
      mono.letters.push_back({"x" + std::to_string(k), 1});
    return finish(std::move(pres), std::move(group), std::move(mono), r);
  }

  // n < k: free abelian grouplike block G' on k-n letters; works for any
  // chain.  Sigma = |Pi| prod_i a_i / (1 - zeta_i).
  HopfPresentation hp;
  hp.name = "abelian_mixed";
  for (std::size_t i = 1; i <= n; ++i) {
    hp.grouplikes.push_back({"g" + std::to_string(i), 0});
    hp.skewprims.push_back({"x" + std::to_string(i), {{"g" + std::to_string(i), 1}}, {}});
  }
  for (std::size_t i = 1; i <= k - n; ++i) hp.grouplikes.push_back({"y" + std::to_string(i), 0});
  PresentationPtr pres = make_presentation(std::move(hp));

  FieldElement rest = F->from_integer(static_cast<long long>(order));
  for (std::size_t i = 1; i < n; ++i) rest = rest / (F->one() - zeta_i(i));
  FieldElement a1 = r * (F->one() - zeta_i(0)) / rest;

  std::vector<Character> gens;
  for (std::size_t i = 0; i < k; ++i) {
    std::map<std::string, FieldElement> values;
    for (std::size_t j = 1; j <= n; ++j) {
      bool mine = (i + 1 == j);
      values.emplace("g" + std::to_string(j), mine ? zeta_i(i) : F->one());
      values.emplace("x" + std::to_string(j),
                     mine ? (i == 0 ? a1 : F->one()) : F->zero());
    }
    for (std::size_t j = 1; j <= k - n; ++j)
      values.emplace("y" + std::to_string(j), (i >= n && i - n + 1 == j) ? zeta_i(i) : F->one());
    gens.push_back(validate_character(pres, F, values));
  }
  CharacterGroup group = generate_character_group(gens, 4096);
  require(group.order() == order, "InternalError", "abelian group has wrong order");

  // The quotient step of the construction: Pi' = <gamma_{n+1}..gamma_k>
  // stabilizes the monomial, and Sigma_Pi = |Pi'| Sigma_{Pi''}.
  Monomial mono;
  for (std::size_t i = 1; i <= n; ++i) mono.letters.push_back({"x" + std::to_string(i), 1});
  {
    std::vector<std::size_t> prime_gens(group.generator_indices.begin() + n,
                                        group.generator_indices.end());
    auto pi_prime = subgroup_closure(group.table, prime_gens);
    SigmaReport quotient_check = sigma_via_quotient(group, pi_prime, mono);
    require(quotient_check.agree, "InternalError", "quotient reduction failed");
  }
  return finish(std::move(pres), std::move(group), std::move(mono), r);
}

}  // namespace weightsum
