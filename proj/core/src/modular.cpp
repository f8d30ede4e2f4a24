#include "weightsum/modular.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace weightsum {

Int binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Int num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= Int(n - i);
    den *= Int(i + 1);
  }
  return num / den;
}

namespace {

// The symbol C(x, f) = x(x-1)...(x-f+1)/f! as an exact rational at x in Z.
Rat falling_binomial(long long x, std::uint64_t f) {
  Rat num = 1;
  for (std::uint64_t i = 0; i < f; ++i) num *= Rat(x - static_cast<long long>(i));
  Rat den = 1;
  for (std::uint64_t i = 1; i <= f; ++i) den *= Rat(i);
  return num / den;
}

Int int_pow(Int base, std::uint64_t e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * a) % p);
    a = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * a) % p);
    e >>= 1;
  }
  return r;
}

}  // namespace

PhiPolynomial eulerian_coeffs(std::uint64_t f0) {
  require(f0 >= 1, "InvalidSpec", "f0 must be positive");
  require(f0 <= 64, "InvalidSpec", "f0 beyond desk scale");
  // Evaluate the defining identity at X = 1, 2, ...: at X = l everything
  // with i > l-1 vanishes and the alpha_{l-1} coefficient is C(f0, f0) = 1,
  // so the system is triangular with unit diagonal.
  std::vector<Rat> alpha(f0);
  for (std::uint64_t l = 1; l <= f0; ++l) {
    Rat rhs = Rat(int_pow(Int(l), f0));
    for (std::uint64_t i = 0; i + 1 < l; ++i)
      rhs -= alpha[i] * falling_binomial(static_cast<long long>(l + f0 - 1 - i), f0);
    alpha[l - 1] = rhs;
  }
  PhiPolynomial result;
  result.f0 = f0;
  for (auto& a : alpha) {
    require(denominator(a) == 1, "InternalError",
            "Eulerian coefficient is not an integer (falsifies the coefficient theorem)");
    result.coeffs.push_back(numerator(a));
  }
  // Freeze the defining identity at f0+1 further sample points.
  for (long long x = -1; x <= static_cast<long long>(f0); ++x) {
    Rat lhs = 0;
    for (std::uint64_t i = 0; i < f0; ++i)
      lhs += Rat(result.coeffs[i]) * falling_binomial(x + static_cast<long long>(f0 - 1 - i), f0);
    Rat rhs = Rat(int_pow(Int(x), f0));
    require(lhs == rhs, "InternalError", "Eulerian coefficients fail the defining identity");
  }
  return result;
}

FieldElement varphi_direct(const FieldPtr& field, std::uint64_t f, const FieldElement& z) {
  std::uint64_t p = field->characteristic();
  require(p > 0, "WrongCharacteristic", "phi_p lives in positive characteristic");
  FieldElement acc = field->zero();
  for (std::uint64_t l = 1; l <= p; ++l) {
    std::uint64_t c = (f == 0) ? 1 : powmod_u64(l, f, p);
    acc = acc + field->from_integer(static_cast<long long>(c)) * z.pow(static_cast<long long>(l));
  }
  return acc;
}

FieldElement varphi_closed(const FieldPtr& field, std::uint64_t f, const FieldElement& z) {
  std::uint64_t p = field->characteristic();
  require(p > 0, "WrongCharacteristic", "phi_p lives in positive characteristic");
  require(f > 0, "InvalidSpec", "closed form needs f > 0");
  std::uint64_t f0 = (p == 2) ? 1 : ((f - 1) % (p - 1)) + 1;
  PhiPolynomial g = eulerian_coeffs(f0);
  FieldElement gval = field->zero();
  for (std::uint64_t i = 0; i < f0; ++i)
    gval = gval + field->from_integer(g.coeffs[i]) * z.pow(static_cast<long long>(i));
  return z * (field->one() - z).pow(static_cast<long long>(p - 1 - f0)) * gval;
}

std::uint64_t multinomial_mod(std::uint64_t p, const std::vector<std::uint64_t>& parts) {
  require(is_prime_u64(p), "NotPrime", "modulus must be prime");
  std::uint64_t n = std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
  // Generalized Lucas: split every number into base-p digits; any carry in
  // the digit sums kills the coefficient mod p.
  std::vector<std::uint64_t> rest = parts;
  std::uint64_t result = 1;
  while (n > 0) {
    std::uint64_t nd = n % p;
    std::uint64_t digit_sum = 0;
    for (auto& l : rest) digit_sum += l % p;
    if (digit_sum != nd) return 0;
    // digit multinomial nd! / prod(ld!) mod p, all arguments < p
    std::uint64_t num = 1;
    for (std::uint64_t i = 2; i <= nd; ++i) num = (num * i) % p;
    std::uint64_t den = 1;
    for (auto& l : rest) {
      for (std::uint64_t i = 2; i <= l % p; ++i) den = (den * i) % p;
      l /= p;
    }
    result = (result * num) % p;
    result = (result * powmod_u64(den, p - 2, p)) % p;
    n /= p;
  }
  return result;
}

bool lnom_divisible(std::uint64_t p, const std::vector<std::uint64_t>& parts) {
  require(is_prime_u64(p), "NotPrime", "modulus must be prime");
  std::vector<std::uint64_t> l = parts;
  std::uint64_t n = std::accumulate(l.begin(), l.end(), std::uint64_t{0});
  while (n > 0) {
    std::uint64_t ps = 1;
    while (ps * p <= n) ps *= p;
    auto it = std::max_element(l.begin(), l.end());
    if (*it < ps) return true;  // first clause of the lemma
    *it -= ps;                  // second clause: reduce and recurse
    n -= ps;
  }
  return false;  // multinomial of the empty sum is 1
}

FieldElement permanent_direct(const std::vector<std::vector<FieldElement>>& a) {
  std::size_t n = a.size();
  require(n >= 1 && n <= 8, "InvalidSpec", "direct permanent covers 1x1 .. 8x8");
  for (const auto& row : a) require(row.size() == n, "NotSquare", "permanent of non-square matrix");
  const FieldPtr& F = a[0][0].field();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  FieldElement acc = F->zero();
  do {
    FieldElement term = F->one();
    for (std::size_t i = 0; i < n; ++i) term = term * a[i][perm[i]];
    acc = acc + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

FieldElement permanent(const std::vector<std::vector<FieldElement>>& a) {
  std::size_t n = a.size();
  require(n >= 1, "NotSquare", "permanent needs a nonempty matrix");
  require(n <= 16, "InvalidSpec", "Ryser loop capped at 16x16");
  for (const auto& row : a) require(row.size() == n, "NotSquare", "permanent of non-square matrix");
  const FieldPtr& F = a[0][0].field();
  FieldElement total = F->zero();
  // Ryser: perm(A) = (-1)^n sum_{S != 0} (-1)^{|S|} prod_i sum_{j in S} a_ij
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    FieldElement prod = F->one();
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) {
      FieldElement row_sum = F->zero();
      for (std::size_t j = 0; j < n; ++j)
        if (mask & (1ull << j)) row_sum = row_sum + a[i][j];
      prod = prod * row_sum;
    }
    bool negate = (n - __builtin_popcountll(mask)) % 2 == 1;
    total = negate ? total - prod : total + prod;
  }
  if (n <= 6)
    require(total == permanent_direct(a), "InternalError",
            "Ryser and direct permanent disagree");
  return total;
}

FieldElement determinant(const std::vector<std::vector<FieldElement>>& input) {
  auto a = input;
  std::size_t n = a.size();
  require(n >= 1, "NotSquare", "determinant needs a nonempty matrix");
  for (const auto& row : a) require(row.size() == n, "NotSquare", "determinant of non-square matrix");
  const FieldPtr& F = a[0][0].field();
  FieldElement det = F->one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return F->zero();
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det = det * a[col][col];
    FieldElement inv = a[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      FieldElement factor = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] = a[r][c] - factor * a[col][c];
    }
  }
  return det;
}

FieldElement sigma_elementary_abelian(const std::vector<Character>& basis,
                                      const std::vector<std::string>& letters) {
  require(!basis.empty(), "InvalidSpec", "need at least one basis character");
  const FieldPtr& F = basis[0].field();
  std::uint64_t p = F->characteristic();
  require(p > 0, "WrongCharacteristic", "elementary abelian kernel needs characteristic p");
  std::size_t k = basis.size();
  std::size_t n = letters.size();
  require(n >= 1 && n <= 10, "InvalidSpec", "partition enumeration enforced for n <= 10");

  if (n % (p - 1) != 0 || k * (p - 1) > n) return F->zero();

  std::vector<std::vector<FieldElement>> a(n, std::vector<FieldElement>(k));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j].value(letters[i]);

  if (k == n) {
    // Only p = 2 reaches here; phi(1,1)^k = 1 and the sum is the permanent,
    // which coincides with the determinant in characteristic 2.
    FieldElement perm = permanent(a);
    require(perm == determinant(a), "InternalError", "perm != det in characteristic 2");
    return perm;
  }

  // Key-claim expansion: assign each letter to a basis slot; fibers must be
  // nonempty with size divisible by (p-1); each full assignment contributes
  // prod_i a[i][slot(i)], and the total carries (-1)^k.
  FieldElement total = F->zero();
  std::vector<std::uint64_t> counts(k, 0);
  auto needed = [&]() {
    std::uint64_t need = 0;
    for (auto c : counts) {
      if (c == 0)
        need += p - 1;
      else if (c % (p - 1) != 0)
        need += (p - 1) - (c % (p - 1));
    }
    return need;
  };
  std::function<void(std::size_t, FieldElement)> rec = [&](std::size_t i, FieldElement partial) {
    if (i == n) {
      for (auto c : counts)
        if (c == 0 || c % (p - 1) != 0) return;
      total = total + partial;
      return;
    }
    if (static_cast<std::uint64_t>(n - i) < needed()) return;
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      counts[j]++;
      rec(i + 1, partial * a[i][j]);
      counts[j]--;
    }
  };
  rec(0, F->one());
  FieldElement sign = (k % 2 == 1) ? -F->one() : F->one();
  return sign * total;
}

namespace {

std::vector<std::size_t> pseudo_primitive_indices(const CharacterGroup& pi, const Monomial& m) {
  std::vector<std::size_t> j;
  for (std::size_t i = 0; i < m.letters.size(); ++i)
    if (letter_is_pseudo_primitive(pi, m.letters[i].name)) j.push_back(i);
  return j;
}

FieldElement subgroup_sum(const CharacterGroup& pi, const std::vector<std::size_t>& indices,
                          const Monomial& m) {
  FieldElement acc = group_field(pi)->zero();
  for (std::size_t idx : indices) acc = acc + pi.elements[idx].eval(m);
  return acc;
}

}  // namespace

SigmaReport sigma_abelian_split(const CharacterGroup& pi, const Monomial& m, bool with_brute) {
  const auto& pres = group_presentation(pi);
  const FieldPtr& F = group_field(pi);
  require(monomial_is_skew_product(pres, m), "InvalidSpec", "need a product of skew letters");
  require(is_abelian(pi.table), "NotAbelian", "split theorem needs abelian Pi");

  std::uint64_t p = F->characteristic();
  bool p_divides = p > 0 && pi.order() % p == 0;
  std::vector<std::size_t> sylow = p_divides ? sylow_subgroup(pi.table, p)
                                             : std::vector<std::size_t>{0};
  std::vector<std::size_t> complement;
  if (p_divides) {
    complement = hall_complement(pi.table, p);
  } else {
    complement.resize(pi.order());
    std::iota(complement.begin(), complement.end(), 0);
  }

  auto j_set = pseudo_primitive_indices(pi, m);
  std::vector<bool> in_j(m.letters.size(), false);
  for (std::size_t i : j_set) in_j[i] = true;

  // First factor: g_J h_{[n] \ J} over the complement.
  Monomial mixed;
  for (std::size_t i = 0; i < m.letters.size(); ++i) {
    if (in_j[i]) {
      const SkewGen* sk = pres->find_skew(m.letters[i].name);
      for (const auto& [gen, exp] : sk->g) mixed.letters.push_back({gen, exp});
    } else {
      mixed.letters.push_back(m.letters[i]);
    }
  }
  // Second factor: h_J over the Sylow subgroup.
  Monomial pseudo_part;
  for (std::size_t i : j_set) pseudo_part.letters.push_back(m.letters[i]);

  FieldElement first = subgroup_sum(pi, complement, mixed);
  FieldElement second = subgroup_sum(pi, sylow, pseudo_part);
  FieldElement closed = first * second;

  std::string path = "abelian.split";
  if (!p_divides && !j_set.empty()) path = "abelian.split_zero";

  std::optional<FieldElement> brute;
  if (with_brute) brute = sigma_brute(pi, m);
  return make_report(std::move(brute), closed, path,
                     {{std::to_string(j_set.size()), "pseudo-primitive letters"}});
}

SigmaReport sigma_abelian_closed(const CharacterGroup& pi, const Monomial& m, bool with_brute) {
  const auto& pres = group_presentation(pi);
  const FieldPtr& F = group_field(pi);
  require(monomial_is_skew_product(pres, m), "InvalidSpec", "need a product of skew letters");
  require(is_abelian(pi.table), "NotAbelian", "the abelian closed form needs abelian Pi");
  std::uint64_t p = F->characteristic();
  require(p == 0 || pi.order() % p != 0, "CharDividesOrder",
          "characteristic divides |Pi|; use the split theorem");
  std::size_t n = m.letters.size();
  require(n <= 16, "InvalidSpec", "subset enumeration capped at 16 letters");

  // Witness per letter: beta with beta(g_i) != beta(g'_i), generators first.
  std::vector<SigmaWitness> witnesses;
  FieldElement level_product = F->one();
  for (const auto& letter : m.letters) {
    const SkewGen* sk = pres->find_skew(letter.name);
    const Character* witness = nullptr;
    auto try_idx = [&](std::size_t idx) {
      if (witness) return;
      const Character& chi = pi.elements[idx];
      if (chi.eval_word(sk->g) != chi.eval_word(sk->gp)) witness = &chi;
    };
    for (std::size_t idx : pi.generator_indices) try_idx(idx);
    for (std::size_t idx = 0; idx < pi.order() && !witness; ++idx) try_idx(idx);
    require(witness != nullptr, "PseudoPrimitiveLetter",
            letter.name + " is pseudo-primitive; the closed form does not apply");
    level_product = level_product * level_function(*witness, letter.name);
    witnesses.push_back({witness->to_string(), "witness for " + letter.name});
  }

  // S = { I : g_I g'_{[n]\I} in G_Pi }, signed count.
  long long signed_count = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    GroupWord w;
    for (std::size_t i = 0; i < n; ++i) {
      const SkewGen* sk = pres->find_skew(m.letters[i].name);
      w = word_concat(w, (mask & (1ull << i)) ? sk->g : sk->gp);
    }
    if (membership_gpi(pi, w).in_gpi)
      signed_count += (__builtin_popcountll(mask) % 2 == 0) ? 1 : -1;
  }

  FieldElement sign = (n % 2 == 1) ? -F->one() : F->one();
  FieldElement closed = sign * F->from_integer(static_cast<long long>(pi.order())) *
                        level_product * F->from_integer(signed_count);
  std::optional<FieldElement> brute;
  if (with_brute) brute = sigma_brute(pi, m);
  return make_report(std::move(brute), closed, "Tabel", std::move(witnesses));
}

SigmaReport sigma_pseudo_charp(const CharacterGroup& pi, const Monomial& m, bool with_brute) {
  const auto& pres = group_presentation(pi);
  const FieldPtr& F = group_field(pi);
  require(monomial_is_skew_product(pres, m), "InvalidSpec", "need a product of skew letters");
  std::uint64_t p = F->characteristic();
  require(p > 0, "WrongCharacteristic", "this dispatch needs characteristic p > 0");
  for (const auto& letter : m.letters)
    require(letter_is_pseudo_primitive(pi, letter.name), "NotPseudoPrimitive",
            letter.name + " is not pseudo-primitive with respect to Pi");

  std::optional<FieldElement> brute;
  if (with_brute) brute = sigma_brute(pi, m);

  if (pi.order() % p != 0)
    return make_report(std::move(brute), F->zero(), "T6.trivial_sylow");

  auto sylow = sylow_subgroup(pi.table, p);
  for (std::size_t idx : sylow)
    if (element_order(pi.table, idx) == p * p)
      return make_report(std::move(brute), F->zero(), "T6.order_p2",
                         {{pi.elements[idx].to_string(), "order p^2"}});

  auto comm = commutator_subgroup(pi.table);
  for (std::size_t idx : sylow)
    if (idx != 0 && std::binary_search(comm.begin(), comm.end(), idx))
      return make_report(std::move(brute), F->zero(), "T6.meets_commutator",
                         {{pi.elements[idx].to_string(), "in Sylow and [Pi,Pi]"}});

  // Now Pi_p is elementary abelian of rank k and maps isomorphically onto a
  // Sylow subgroup of Phi = Pi/[Pi,Pi]; Eq. Ephi applies.
  SubgroupView sylow_view = subgroup_table(pi.table, sylow);
  std::vector<std::size_t> basis_parent;
  {
    std::vector<std::size_t> basis_local;
    std::vector<std::size_t> span = {0};
    for (std::size_t i = 1; i < sylow_view.table.n && span.size() < sylow_view.table.n; ++i) {
      if (std::binary_search(span.begin(), span.end(), i)) continue;
      auto seed = basis_local;
      seed.push_back(i);
      span = subgroup_closure(sylow_view.table, seed);
      basis_local.push_back(i);
    }
    for (std::size_t i : basis_local) basis_parent.push_back(sylow_view.elements[i]);
  }
  std::vector<Character> basis;
  for (std::size_t idx : basis_parent) basis.push_back(pi.elements[idx]);

  std::vector<std::string> letters;
  for (const auto& letter : m.letters) letters.push_back(letter.name);
  FieldElement sylow_sum = sigma_elementary_abelian(basis, letters);

  Quotient phi = quotient_group(pi.table, comm);
  auto complement = hall_complement(phi.table, p);
  GroupWord g = skew_product_g(pres, m);
  FieldElement complement_sum = F->zero();
  for (std::size_t c : complement)
    complement_sum = complement_sum + pi.elements[phi.reps[c]].eval_word(g);

  FieldElement closed =
      F->from_integer(static_cast<long long>(comm.size())) * complement_sum * sylow_sum;
  std::string t8_tag;
  if (letters.size() % (p - 1) != 0 || basis.size() * (p - 1) > letters.size())
    t8_tag = "T8.vanishing";
  else if (basis.size() == letters.size())
    t8_tag = "T8.permanent";
  else
    t8_tag = "T8.expansion";
  std::string path = "T5.Ephi+" + t8_tag;
  std::vector<SigmaWitness> witnesses;
  witnesses.push_back({std::to_string(comm.size()), "|[Pi,Pi]|"});
  witnesses.push_back({std::to_string(basis.size()), "rank of Pi_p"});
  return make_report(std::move(brute), closed, path, std::move(witnesses));
}

SigmaReport tunproved_char2(const CharacterGroup& pi, const std::string& skew_letter,
                            bool with_brute) {
  const auto& pres = group_presentation(pi);
  const FieldPtr& F = group_field(pi);
  require(F->characteristic() == 2, "WrongCharacteristic", "this is the characteristic-2 theorem");
  const SkewGen* sk = pres->find_skew(skew_letter);
  require(sk != nullptr, "UnknownGenerator", skew_letter + " is not skew-primitive");
  require(membership_gpi(pi, sk->g).in_gpi && membership_gpi(pi, sk->gp).in_gpi, "InvalidSpec",
          "letter must be almost primitive with respect to Pi");

  Monomial m;
  m.letters.push_back({skew_letter, 1});
  std::optional<FieldElement> brute;
  if (with_brute) brute = sigma_brute(pi, m);

  if (pi.order() % 2 == 1) return make_report(std::move(brute), F->zero(), "Tunproved.odd");
  if (pi.order() % 4 == 0) return make_report(std::move(brute), F->zero(), "Tunproved.div4");
  for (std::size_t i = 1; i < pi.order(); ++i) {
    if (pi.table.mul(i, i) == 0) {
      return make_report(std::move(brute), pi.elements[i].value(skew_letter), "Tunproved.order2",
                         {{pi.elements[i].to_string(), "order-2 character"}});
    }
  }
  fail("InternalError", "even group without an involution");
}

Int binomial_skip_sum(std::uint64_t n, std::uint64_t m) {
  require(m >= 1, "InvalidSpec", "modulus m must be >= 1");
  Int direct = 0;
  for (std::uint64_t j = 0; m * j <= n; ++j) direct += binomial(n, m * j);

  // Roots-of-unity filter, evaluated exactly in Q(zeta_m).
  FieldPtr F = Field::make(FieldSpec::cyclotomic(m));
  FieldElement zeta = F->primitive_root_of_unity(m);
  FieldElement acc = F->zero();
  for (std::uint64_t k = 0; k < m; ++k)
    acc = acc + (F->one() + zeta.pow(static_cast<long long>(k))).pow(static_cast<long long>(n));
  FieldElement filtered = acc / F->from_integer(static_cast<long long>(m));
  require(filtered == F->from_integer(direct), "InternalError",
          "binomial filter disagrees with the direct sum");
  return direct;
}

}  // namespace weightsum
