#include "weightsum/charsum.hpp"

#include <algorithm>

#include "weightsum/modular.hpp"

namespace weightsum {

const FieldElement& SigmaReport::value() const {
  if (closed) return *closed;
  require(brute.has_value(), "InvalidSpec", "report carries no value");
  return *brute;
}

SigmaReport make_report(std::optional<FieldElement> brute, std::optional<FieldElement> closed,
                        std::string path, std::vector<SigmaWitness> witnesses) {
  SigmaReport r;
  r.brute = std::move(brute);
  r.closed = std::move(closed);
  r.path = std::move(path);
  r.witnesses = std::move(witnesses);
  r.agree = !(r.brute && r.closed) || (*r.brute == *r.closed);
  return r;
}

FieldElement sigma_brute(const CharacterGroup& pi, const Monomial& m) {
  FieldElement acc = group_field(pi)->zero();
  for (const auto& chi : pi.elements) acc = acc + chi.eval(m);
  return acc;
}

GPiMembership membership_gpi(const CharacterGroup& pi, const GroupWord& word) {
  GPiMembership result;
  result.element = word;
  result.in_gpi = true;
  for (const auto& chi : pi.elements) {
    if (!chi.eval_word(word).is_one()) {
      result.in_gpi = false;
      result.failing_witness = chi;
      break;
    }
  }
  // Cheaper route per the remark after the orthogonality proposition:
  // commutators kill every grouplike word, so it suffices to test lifts of
  // generators of Pi/[Pi,Pi].  The two strategies must agree.
  auto comm = commutator_subgroup(pi.table);
  Quotient phi = quotient_group(pi.table, comm);
  bool via_lifts = true;
  for (std::size_t gen : pi.generator_indices) {
    std::size_t rep = phi.reps[phi.coset_of[gen]];
    if (!pi.elements[rep].eval_word(word).is_one()) {
      via_lifts = false;
      break;
    }
  }
  require(via_lifts == result.in_gpi, "InternalError",
          "G_Pi membership strategies disagree on " + Monomial::from_word(word).to_string());
  return result;
}

bool monomial_is_grouplike(const PresentationPtr& pres, const Monomial& m) {
  for (const auto& letter : m.letters)
    if (pres->find_grouplike(letter.name) == nullptr) return false;
  return true;
}

bool monomial_is_skew_product(const PresentationPtr& pres, const Monomial& m) {
  if (m.letters.empty()) return false;
  for (const auto& letter : m.letters)
    if (pres->find_skew(letter.name) == nullptr || letter.exponent != 1) return false;
  return true;
}

namespace {

GroupWord monomial_word(const Monomial& m) {
  GroupWord w;
  for (const auto& letter : m.letters) w = word_concat(w, {{letter.name, letter.exponent}});
  return w;
}

}  // namespace

GroupWord skew_product_g(const PresentationPtr& pres, const Monomial& m) {
  GroupWord w;
  for (const auto& letter : m.letters) w = word_concat(w, pres->find_skew(letter.name)->g);
  return w;
}

GroupWord skew_product_gp(const PresentationPtr& pres, const Monomial& m) {
  GroupWord w;
  for (const auto& letter : m.letters) w = word_concat(w, pres->find_skew(letter.name)->gp);
  return w;
}

bool letter_is_pseudo_primitive(const CharacterGroup& pi, const std::string& skew_letter) {
  const auto& pres = group_presentation(pi);
  const SkewGen* sk = pres->find_skew(skew_letter);
  require(sk != nullptr, "UnknownGenerator", skew_letter + " is not skew-primitive");
  GroupWord diff = word_concat(word_inverse(sk->g), sk->gp);
  for (const auto& chi : pi.elements)
    if (!chi.eval_word(diff).is_one()) return false;
  return true;
}

FieldElement involution_sum(const CharacterGroup& pi, const Monomial& m) {
  FieldElement acc = group_field(pi)->zero();
  for (std::size_t i = 1; i < pi.order(); ++i)
    if (pi.table.mul(i, i) == 0) acc = acc + pi.elements[i].eval(m);
  return acc;
}

SigmaReport sigma_grouplike(const CharacterGroup& pi, const Monomial& m, bool with_brute) {
  const auto& pres = group_presentation(pi);
  require(monomial_is_grouplike(pres, m), "InvalidSpec", "monomial is not purely grouplike");
  const FieldPtr& F = group_field(pi);
  GPiMembership membership = membership_gpi(pi, monomial_word(m));
  std::optional<FieldElement> brute;
  if (with_brute) brute = sigma_brute(pi, m);
  std::vector<SigmaWitness> witnesses;
  FieldElement closed = F->zero();
  std::string path = "P5.nontrivial";
  if (membership.in_gpi) {
    closed = F->from_integer(static_cast<long long>(pi.order()));
    path = "P5.trivial";
  } else {
    witnesses.push_back({membership.failing_witness->to_string(), "gamma(g) != 1"});
  }
  return make_report(std::move(brute), closed, path, std::move(witnesses));
}

FieldElement level_function(const Character& chi, const std::string& skew_letter) {
  const SkewGen* sk = chi.presentation()->find_skew(skew_letter);
  require(sk != nullptr, "UnknownGenerator", skew_letter + " is not skew-primitive");
  FieldElement vg = chi.eval_word(sk->g);
  FieldElement vgp = chi.eval_word(sk->gp);
  require(vg != vgp, "NotInNh", "character has chi(g) = chi(g'), level undefined");
  return chi.value(skew_letter) / (vg - vgp);
}

SigmaReport sigma_skew(const CharacterGroup& pi, const std::string& skew_letter, bool with_brute) {
  const auto& pres = group_presentation(pi);
  const FieldPtr& F = group_field(pi);
  const SkewGen* sk = pres->find_skew(skew_letter);
  require(sk != nullptr, "UnknownGenerator", skew_letter + " is not skew-primitive");
  Monomial m;
  m.letters.push_back({skew_letter, 1});
  std::optional<FieldElement> brute;
  if (with_brute) brute = sigma_brute(pi, m);

  // Case 1: some lambda moves both g and g'.
  for (const auto& chi : pi.elements) {
    if (!chi.eval_word(sk->g).is_one() && !chi.eval_word(sk->gp).is_one()) {
      return make_report(std::move(brute), F->zero(), "T3.case1",
                         {{chi.to_string(), "lambda(g) != 1 != lambda(g')"}});
    }
  }
  bool in_g = membership_gpi(pi, sk->g).in_gpi;
  bool in_gp = membership_gpi(pi, sk->gp).in_gpi;
  require(in_g || in_gp, "InternalError", "T3 trichotomy failed: neither word in G_Pi");

  if (in_g != in_gp) {
    // Case 2: exactly one of g, g' is in G_Pi.  The value is independent of
    // the witness; check that across every lambda with lambda(gg') != 1.
    GroupWord ggp = word_concat(sk->g, sk->gp);
    std::optional<FieldElement> closed;
    std::vector<SigmaWitness> witnesses;
    FieldElement order = F->from_integer(static_cast<long long>(pi.order()));
    for (const auto& chi : pi.elements) {
      FieldElement v = chi.eval_word(ggp);
      if (v.is_one()) continue;
      FieldElement candidate = order * chi.value(skew_letter) / (F->one() - v);
      if (!closed) {
        closed = candidate;
      } else {
        require(*closed == candidate, "InternalError",
                "T3 case 2 witness dependence at " + chi.to_string());
      }
      witnesses.push_back({chi.to_string(), "lambda(gg') != 1"});
    }
    require(closed.has_value(), "InternalError", "T3 case 2 found no witness");
    return make_report(std::move(brute), std::move(closed), "T3.case2", std::move(witnesses));
  }

  // Case 3: both g and g' in G_Pi, so lambda(gg') = 1 throughout.
  FieldElement order2 = involution_sum(pi, m);
  require((order2 + order2).is_zero(), "InternalError", "T3 case 3: 2 Sigma != 0");
  if (F->characteristic() == 2) {
    SigmaReport sub = tunproved_char2(pi, skew_letter, false);
    require(!sub.closed || *sub.closed == order2, "InternalError",
            "Tunproved value disagrees with the involution sum");
    return make_report(std::move(brute), order2, sub.path, std::move(sub.witnesses));
  }
  require(order2.is_zero(), "InternalError", "T3 case 3: involution sum nonzero in odd char");
  return make_report(std::move(brute), F->zero(), "T3.case3");
}

SigmaReport sigma_product_general(const CharacterGroup& pi, const Monomial& m, bool with_brute) {
  const auto& pres = group_presentation(pi);
  const FieldPtr& F = group_field(pi);
  require(monomial_is_skew_product(pres, m), "InvalidSpec",
          "monomial is not a product of skew-primitive letters");
  std::size_t n = m.letters.size();
  std::optional<FieldElement> brute;
  if (with_brute) brute = sigma_brute(pi, m);

  GroupWord g = skew_product_g(pres, m);
  GroupWord gp = skew_product_gp(pres, m);

  // (i) some lambda kills every letter yet moves g or g'.
  for (const auto& chi : pi.elements) {
    bool kills_all = true;
    for (const auto& letter : m.letters)
      if (!chi.value(letter.name).is_zero()) {
        kills_all = false;
        break;
      }
    if (kills_all && (!chi.eval_word(g).is_one() || !chi.eval_word(gp).is_one()))
      return make_report(std::move(brute), F->zero(), "S5.zero_letters",
                         {{chi.to_string(), "lambda(h_i) = 0, lambda moves g or g'"}});
  }

  std::uint64_t p = F->characteristic();

  // (ii) a p-Sylow subgroup with an element of order p^2 forces zero.
  if (p > 0 && pi.order() % p == 0) {
    auto sylow = sylow_subgroup(pi.table, p);
    for (std::size_t idx : sylow)
      if (element_order(pi.table, idx) == p * p)
        return make_report(std::move(brute), F->zero(), "Tskew.order_p2",
                           {{pi.elements[idx].to_string(), "order p^2"}});
  }

  // (iii) away from the group order, one pseudo-primitive letter kills the sum.
  bool char_coprime = (p == 0) || (pi.order() % p != 0);
  if (char_coprime) {
    for (const auto& letter : m.letters)
      if (letter_is_pseudo_primitive(pi, letter.name))
        return make_report(std::move(brute), F->zero(), "P7.pseudo",
                           {{letter.name, "pseudo-primitive letter"}});
  }

  // (iv) gg' in G_Pi with char 2 or odd length: the involution sum.
  if ((p == 2 || n % 2 == 1) && membership_gpi(pi, word_concat(g, gp)).in_gpi) {
    FieldElement order2 = involution_sum(pi, m);
    require((order2 + order2).is_zero(), "InternalError", "S5 involution: 2 Sigma != 0");
    return make_report(std::move(brute), order2, "S5.involution");
  }

  // (v) structured evaluation, else brute force only.  Reaching this point
  // with char coprime to |Pi| means no letter is pseudo-primitive, which is
  // exactly the hypothesis of the abelian closed form.
  if (is_abelian(pi.table)) {
    SigmaReport sub = char_coprime ? sigma_abelian_closed(pi, m, false)
                                   : sigma_abelian_split(pi, m, false);
    sub.brute = std::move(brute);
    sub.agree = !(sub.brute && sub.closed) || (*sub.brute == *sub.closed);
    return sub;
  }
  bool all_pseudo = true;
  for (const auto& letter : m.letters)
    if (!letter_is_pseudo_primitive(pi, letter.name)) {
      all_pseudo = false;
      break;
    }
  if (all_pseudo && p > 0 && pi.order() % p == 0) {
    SigmaReport sub = sigma_pseudo_charp(pi, m, false);
    sub.brute = std::move(brute);
    sub.agree = !(sub.brute && sub.closed) || (*sub.brute == *sub.closed);
    return sub;
  }
  return make_report(std::move(brute), std::nullopt, "general.brute_only");
}

StabilizerResult stabilizer_in_pi(const CharacterGroup& pi, const Monomial& m) {
  const auto& pres = group_presentation(pi);
  std::size_t n = pi.order();
  std::vector<FieldElement> eval(n);
  for (std::size_t i = 0; i < n; ++i) eval[i] = pi.elements[i].eval(m);

  StabilizerResult result;
  for (std::size_t c = 0; c < n; ++c) {
    bool stabilizes = true;
    for (std::size_t b = 0; b < n && stabilizes; ++b)
      for (std::size_t d = 0; d < n; ++d)
        if (eval[pi.table.mul(pi.table.mul(b, c), d)] != eval[pi.table.mul(b, d)]) {
          stabilizes = false;
          break;
        }
    if (stabilizes) result.stabilizer.push_back(c);
  }

  if (m.letters.size() == 1) {
    // Gamma'_h by the stabilizer lemma: gamma = epsilon on the subcoalgebra
    // of the letter.
    const auto& letter = m.letters[0];
    std::vector<std::size_t> fixed;
    if (const SkewGen* sk = pres->find_skew(letter.name)) {
      for (std::size_t i = 0; i < n; ++i) {
        const Character& chi = pi.elements[i];
        if (chi.value(letter.name).is_zero() && chi.eval_word(sk->g).is_one() &&
            chi.eval_word(sk->gp).is_one())
          fixed.push_back(i);
      }
    } else {
      for (std::size_t i = 0; i < n; ++i)
        if (pi.elements[i].eval(m).is_one()) fixed.push_back(i);
    }
    result.fixed_monoid = std::move(fixed);
  }
  return result;
}

SigmaReport sigma_via_quotient(const CharacterGroup& pi, const std::vector<std::size_t>& normal_sub,
                               const Monomial& m, std::mt19937_64* resample_rng,
                               std::size_t resamples) {
  const FieldPtr& F = group_field(pi);
  require(is_subgroup(pi.table, normal_sub), "NotNormal", "index set is not a subgroup");
  require(is_normal(pi.table, normal_sub), "NotNormal", "subgroup is not normal in Pi");
  auto stab = stabilizer_in_pi(pi, m).stabilizer;
  for (std::size_t x : normal_sub)
    require(std::binary_search(stab.begin(), stab.end(), x), "NotStabilizing",
            "subgroup does not stabilize the monomial");

  Quotient q = quotient_group(pi.table, normal_sub);
  FieldElement coset_sum = F->zero();
  for (std::size_t rep : q.reps) coset_sum = coset_sum + pi.elements[rep].eval(m);
  FieldElement closed = F->from_integer(static_cast<long long>(normal_sub.size())) * coset_sum;

  // Lift independence: replace each representative by rep * n for random n
  // in the subgroup; the sum must not move.
  if (resample_rng) {
    std::uniform_int_distribution<std::size_t> pick(0, normal_sub.size() - 1);
    for (std::size_t trial = 0; trial < resamples; ++trial) {
      FieldElement alt = F->zero();
      for (std::size_t rep : q.reps) {
        std::size_t shifted = pi.table.mul(rep, normal_sub[pick(*resample_rng)]);
        alt = alt + pi.elements[shifted].eval(m);
      }
      require(alt == coset_sum, "InternalError", "lift choice changed the coset sum");
    }
  }
  return make_report(sigma_brute(pi, m), closed, "L1.quotient");
}

SigmaReport sigma_direct_product(const CharacterGroup& pi,
                                 const std::vector<std::vector<std::size_t>>& factors,
                                 const Monomial& letters) {
  const auto& pres = group_presentation(pi);
  const FieldPtr& F = group_field(pi);
  require(factors.size() == letters.letters.size(), "InvalidSpec",
          "need exactly one letter per factor");
  std::size_t k = factors.size();

  // Pi must be the internal direct product of the factors, in order.
  std::size_t expected = 1;
  for (const auto& f : factors) {
    require(is_subgroup(pi.table, f), "InvalidSpec", "factor is not a subgroup");
    expected *= f.size();
  }
  require(expected == pi.order(), "FactorConditionFails", "factor orders do not multiply to |Pi|");
  {
    std::vector<bool> seen(pi.order(), false);
    std::vector<std::size_t> odometer(k, 0);
    while (true) {
      std::size_t prod = 0;
      for (std::size_t i = 0; i < k; ++i) prod = pi.table.mul(prod, factors[i][odometer[i]]);
      require(!seen[prod], "FactorConditionFails", "factorisation is not unique");
      seen[prod] = true;
      std::size_t pos = 0;
      while (pos < k && ++odometer[pos] == factors[pos].size()) odometer[pos++] = 0;
      if (pos == k) break;
    }
  }

  // Factor condition: Pi_i fixes the letters of the other factors.
  auto in_fixed_monoid = [&](const Character& chi, const MonomialLetter& letter) {
    if (const SkewGen* sk = pres->find_skew(letter.name))
      return chi.value(letter.name).is_zero() && chi.eval_word(sk->g).is_one() &&
             chi.eval_word(sk->gp).is_one();
    Monomial single;
    single.letters.push_back(letter);
    return chi.eval(single).is_one();
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      for (std::size_t idx : factors[i])
        require(in_fixed_monoid(pi.elements[idx], letters.letters[j]), "FactorConditionFails",
                "factor " + std::to_string(i) + " moves letter " + letters.letters[j].name);
    }

  FieldElement closed = F->one();
  for (std::size_t i = 0; i < k; ++i) {
    Monomial single;
    single.letters.push_back(letters.letters[i]);
    FieldElement factor_sum = F->zero();
    for (std::size_t idx : factors[i]) factor_sum = factor_sum + pi.elements[idx].eval(single);
    closed = closed * factor_sum;
  }
  return make_report(sigma_brute(pi, letters), closed, "Pstab.product");
}

std::vector<IdentityCheck> verify_convolution_identities(const CharacterGroup& pi,
                                                         const Monomial& m) {
  const auto& pres = group_presentation(pi);
  const FieldPtr& F = group_field(pi);
  std::vector<IdentityCheck> checks;
  FieldElement sigma = sigma_brute(pi, m);

  {
    IdentityCheck e0{"E0", true, 0, ""};
    for (const auto& lam : pi.elements) {
      FieldElement left = F->zero(), right = F->zero();
      for (const auto& nu : pi.elements) {
        left = left + convolve(lam, nu).eval(m);
        right = right + convolve(nu, lam).eval(m);
      }
      ++e0.cases;
      if (left != sigma || right != sigma) {
        e0.pass = false;
        e0.detail = "lambda = " + lam.to_string();
        break;
      }
    }
    checks.push_back(std::move(e0));
  }

  bool single_skew = m.letters.size() == 1 && pres->find_skew(m.letters[0].name) != nullptr;
  if (single_skew) {
    const SkewGen* sk = pres->find_skew(m.letters[0].name);
    GroupWord ggp = word_concat(sk->g, sk->gp);
    Monomial g_mono = Monomial::from_word(sk->g);
    Monomial gp_mono = Monomial::from_word(sk->gp);
    FieldElement sigma_g = sigma_brute(pi, g_mono);
    FieldElement sigma_gp = sigma_brute(pi, gp_mono);
    FieldElement order_pi = F->from_integer(static_cast<long long>(pi.order()));

    IdentityCheck e3{"E3", true, 0, ""};
    IdentityCheck e4{"E4", true, 0, ""};
    for (std::size_t i = 0; i < pi.order(); ++i) {
      const Character& lam = pi.elements[i];
      std::size_t n_lam = element_order(pi.table, i);
      FieldElement cyc_sum = F->zero();
      std::size_t cur = 0;
      do {
        cyc_sum = cyc_sum + pi.elements[cur].eval_word(ggp);
        cur = pi.table.mul(cur, i);
      } while (cur != 0);
      FieldElement lhs3 = (F->one() - lam.eval_word(ggp)) * order_pi *
                          F->from_integer(static_cast<long long>(n_lam)) * sigma;
      FieldElement diff = sigma_g - sigma_gp;
      FieldElement rhs3 = (F->from_integer(static_cast<long long>(n_lam)) - cyc_sum) *
                          lam.value(sk->name) * diff * diff;
      ++e3.cases;
      if (lhs3 != rhs3) {
        e3.pass = false;
        e3.detail = "lambda = " + lam.to_string();
      }
      FieldElement lhs4 = (lam.eval_word(sk->g) - lam.eval_word(sk->gp)) * sigma;
      FieldElement rhs4 = lam.value(sk->name) * (sigma_g - sigma_gp);
      ++e4.cases;
      if (lhs4 != rhs4) {
        e4.pass = false;
        e4.detail = "lambda = " + lam.to_string();
      }
    }
    checks.push_back(std::move(e3));
    checks.push_back(std::move(e4));
  }

  if (monomial_is_skew_product(pres, m)) {
    GroupWord g = skew_product_g(pres, m);
    GroupWord gp = skew_product_gp(pres, m);
    IdentityCheck rec{"S5.recursion", true, 0, ""};
    for (const auto& lam : pi.elements) {
      FieldElement lg = lam.eval_word(g);
      FieldElement lgp = lam.eval_word(gp);
      if (!lg.is_one()) {
        FieldElement mixed = F->zero();
        for (const auto& nu : pi.elements) {
          FieldElement term = F->one();
          for (const auto& letter : m.letters) {
            const SkewGen* sk = pres->find_skew(letter.name);
            term = term * (lam.eval_word(sk->g) * nu.value(letter.name) +
                           lam.value(letter.name) * nu.eval_word(sk->gp));
          }
          mixed = mixed + term;
        }
        ++rec.cases;
        if (sigma != (mixed - lg * sigma) / (F->one() - lg)) {
          rec.pass = false;
          rec.detail = "lambda = " + lam.to_string() + " (g side)";
        }
      }
      if (!lgp.is_one()) {
        FieldElement mixed = F->zero();
        for (const auto& nu : pi.elements) {
          FieldElement term = F->one();
          for (const auto& letter : m.letters) {
            const SkewGen* sk = pres->find_skew(letter.name);
            term = term * (nu.eval_word(sk->g) * lam.value(letter.name) +
                           nu.value(letter.name) * lam.eval_word(sk->gp));
          }
          mixed = mixed + term;
        }
        ++rec.cases;
        if (sigma != (mixed - sigma * lgp) / (F->one() - lgp)) {
          rec.pass = false;
          rec.detail = "lambda = " + lam.to_string() + " (g' side)";
        }
      }
    }
    checks.push_back(std::move(rec));
  }
  return checks;
}

}  // namespace weightsum
