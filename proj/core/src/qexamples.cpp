#include "weightsum/qexamples.hpp"

namespace weightsum {

PresentationPtr build_group_ring(unsigned n, std::uint64_t l) {
  HopfPresentation p;
  p.name = "group_ring";
  for (unsigned i = 1; i <= n; ++i) p.grouplikes.push_back({"K" + std::to_string(i), l});
  return make_presentation(std::move(p));
}

PresentationPtr build_uql(unsigned n, std::uint64_t l) {
  HopfPresentation p;
  p.name = "uql";
  for (unsigned i = 1; i <= n; ++i) {
    std::string k = "K" + std::to_string(i);
    p.grouplikes.push_back({k, l});
    p.annihilated.push_back("e" + std::to_string(i));
    p.annihilated.push_back("f" + std::to_string(i));
    p.constraints.push_back({k, ConstraintKind::SelfInverse, 0});
  }
  return make_presentation(std::move(p));
}

PresentationPtr build_borel(unsigned n, std::uint64_t l) {
  HopfPresentation p;
  p.name = "borel";
  for (unsigned i = 1; i <= n; ++i) {
    p.grouplikes.push_back({"K" + std::to_string(i), l});
    p.annihilated.push_back("e" + std::to_string(i));
  }
  return make_presentation(std::move(p));
}

PresentationPtr build_affine_space(unsigned n, std::uint64_t l) {
  HopfPresentation p;
  p.name = "affine_space";
  for (unsigned i = 1; i <= n; ++i) {
    p.grouplikes.push_back({"K" + std::to_string(i), l});
    p.annihilated.push_back("x" + std::to_string(i));
  }
  return make_presentation(std::move(p));
}

PresentationPtr build_virasoro(const std::vector<long long>& e_indices) {
  HopfPresentation p;
  p.name = "virasoro";
  p.grouplikes.push_back({"T", 0});
  p.annihilated.push_back("c");
  for (long long m : e_indices) {
    std::string name = (m < 0) ? "e_m" + std::to_string(-m) : "e" + std::to_string(m);
    p.annihilated.push_back(name);
  }
  return make_presentation(std::move(p));
}

PresentationPtr build_quantum_gl(unsigned n) {
  HopfPresentation p;
  p.name = "quantum_gl";
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j) {
      std::string name = "u" + std::to_string(i) + std::to_string(j);
      if (i == j)
        p.grouplikes.push_back({name, 0});
      else
        p.annihilated.push_back(name);
    }
  return make_presentation(std::move(p));
}

PresentationPtr build_quantum_sl(unsigned n) {
  HopfPresentation p;
  p.name = "quantum_sl";
  GroupWord det;
  for (unsigned i = 1; i <= n; ++i)
    for (unsigned j = 1; j <= n; ++j) {
      std::string name = "u" + std::to_string(i) + std::to_string(j);
      if (i == j) {
        p.grouplikes.push_back({name, 0});
        det.emplace_back(name, 1);
      } else {
        p.annihilated.push_back(name);
      }
    }
  p.unit_products.push_back(std::move(det));
  return make_presentation(std::move(p));
}

SigmaReport sigma_graded(const CharacterGroup& pi, const GradedElement& element) {
  const FieldPtr& F = group_field(pi);
  FieldElement brute = F->zero();
  for (const auto& chi : pi.elements)
    for (const auto& [word, coeff] : element.grouplike_terms)
      brute = brute + coeff * chi.eval_word(word);

  FieldElement closed = F->zero();
  for (const auto& [word, coeff] : element.grouplike_terms)
    if (membership_gpi(pi, word).in_gpi) closed = closed + coeff;
  closed = closed * F->from_integer(static_cast<long long>(pi.order()));
  return make_report(brute, closed, "Pq.graded");
}

SigmaReport sigma_virasoro(const CharacterGroup& pi, const Monomial& word) {
  const auto& pres = group_presentation(pi);
  const FieldPtr& F = group_field(pi);
  require(pres->name == "virasoro", "InvalidSpec", "sigma_virasoro needs the Virasoro builder");
  FieldElement brute = sigma_brute(pi, word);

  long long t_exponent = 0;
  bool killed = false;
  for (const auto& letter : word.letters) {
    if (pres->is_annihilated(letter.name))
      killed = true;
    else
      t_exponent += letter.exponent;
  }
  if (killed) return make_report(brute, F->zero(), "Virasoro.killed");

  // Pi is cyclic (finite subgroup of R^x); T^m lands in G_Pi iff |Pi| | m.
  bool in_gpi = membership_gpi(pi, {{"T", t_exponent}}).in_gpi;
  FieldElement closed =
      in_gpi ? F->from_integer(static_cast<long long>(pi.order())) : F->zero();
  return make_report(brute, closed, in_gpi ? "Virasoro.divides" : "Virasoro.nondivides");
}

std::vector<Character> enumerate_characters(const PresentationPtr& pres, const FieldPtr& field,
                                            std::uint64_t l) {
  std::vector<FieldElement> roots = field->roots_of_unity_dividing(l);
  std::vector<Character> accepted;
  std::size_t k = pres->grouplikes.size();
  require(k <= 12, "InvalidSpec", "exhaustive enumeration capped at 12 grouplike generators");
  std::vector<std::size_t> odo(k, 0);
  while (true) {
    std::map<std::string, FieldElement> values;
    for (std::size_t i = 0; i < k; ++i) values.emplace(pres->grouplikes[i].name, roots[odo[i]]);
    for (const auto& s : pres->skewprims) values.emplace(s.name, field->zero());
    for (const auto& a : pres->annihilated) values.emplace(a, field->zero());
    try {
      accepted.push_back(validate_character(pres, field, values));
    } catch (const Error& e) {
      if (e.code() != "ConstraintViolated" && e.code() != "ZeroGrouplikeValue") throw;
    }
    std::size_t pos = 0;
    while (pos < k && ++odo[pos] == roots.size()) odo[pos++] = 0;
    if (pos == k || k == 0) break;
  }
  return accepted;
}

}  // namespace weightsum
