#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "weightsum/hopf.hpp"

namespace weightsum {

struct SigmaWitness {
  std::string character;
  std::string note;
};

// Every closed-form operation also computes the brute-force sum (unless the
// caller suppresses it) and records which theorem case fired in `path`.
// `agree` is false only when both values are present and differ -- that is
// the interesting failure the CLI turns into exit code 2.
struct SigmaReport {
  std::optional<FieldElement> brute;
  std::optional<FieldElement> closed;
  std::string path;
  bool agree = true;
  std::vector<SigmaWitness> witnesses;

  const FieldElement& value() const;  // closed if present, else brute
};

SigmaReport make_report(std::optional<FieldElement> brute, std::optional<FieldElement> closed,
                        std::string path, std::vector<SigmaWitness> witnesses = {});

// Sigma_Pi := sum_{gamma in Pi} gamma, evaluated at a monomial.  The
// universal oracle everything else is checked against.
FieldElement sigma_brute(const CharacterGroup& pi, const Monomial& m);

struct GPiMembership {
  GroupWord element;
  bool in_gpi = false;
  std::optional<Character> failing_witness;
};

// Scans Pi for a character with gamma(word) != 1; also runs the cheaper
// strategy through lifted generators of Pi/[Pi,Pi] and insists both agree.
GPiMembership membership_gpi(const CharacterGroup& pi, const GroupWord& word);

// Grouplike orthogonality: Sigma_Pi(g) is |Pi| on G_Pi(H) and 0 off it.
SigmaReport sigma_grouplike(const CharacterGroup& pi, const Monomial& grouplike_monomial,
                            bool with_brute = true);

// Theorem dispatch for a single skew-primitive letter.
SigmaReport sigma_skew(const CharacterGroup& pi, const std::string& skew_letter,
                       bool with_brute = true);

// f_h(chi) = chi(h) / (chi(g) - chi(g')); requires chi(g) != chi(g').
FieldElement level_function(const Character& chi, const std::string& skew_letter);

// Products of skew-primitive letters: the general dispatch across the
// vanishing results, the characteristic-p machinery and the abelian theorems.
SigmaReport sigma_product_general(const CharacterGroup& pi, const Monomial& skew_product,
                                  bool with_brute = true);

struct StabilizerResult {
  std::vector<std::size_t> stabilizer;                   // Gamma_m intersect Pi
  std::optional<std::vector<std::size_t>> fixed_monoid;  // Gamma'_m intersect Pi (single letters)
};
StabilizerResult stabilizer_in_pi(const CharacterGroup& pi, const Monomial& m);

// Sigma over coset representatives, scaled by |N|; verifies representative
// independence by resampling lifts when an RNG is supplied.
SigmaReport sigma_via_quotient(const CharacterGroup& pi, const std::vector<std::size_t>& normal_sub,
                               const Monomial& m, std::mt19937_64* resample_rng = nullptr,
                               std::size_t resamples = 5);

// Sigma_Pi(h_1...h_k) = prod_i Sigma_{Pi_i}(h_i) when Pi = Pi_1 x ... x Pi_k
// and Pi_i fixes the letters of the other factors.
SigmaReport sigma_direct_product(const CharacterGroup& pi,
                                 const std::vector<std::vector<std::size_t>>& factors,
                                 const Monomial& letters);

struct IdentityCheck {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::string detail;
};

// Evaluates both sides of E0, E3, E4 and the substring-recursion identities
// for every lambda in Pi.  The recursions are checked as identities (both
// sides from brute-force sums), never used as solvers.
std::vector<IdentityCheck> verify_convolution_identities(const CharacterGroup& pi,
                                                         const Monomial& m);

// Shared helpers for the dispatch modules.
bool monomial_is_grouplike(const PresentationPtr& pres, const Monomial& m);
bool monomial_is_skew_product(const PresentationPtr& pres, const Monomial& m);
GroupWord skew_product_g(const PresentationPtr& pres, const Monomial& m);
GroupWord skew_product_gp(const PresentationPtr& pres, const Monomial& m);
bool letter_is_pseudo_primitive(const CharacterGroup& pi, const std::string& skew_letter);
FieldElement involution_sum(const CharacterGroup& pi, const Monomial& m);

}  // namespace weightsum
