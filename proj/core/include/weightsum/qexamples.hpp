#pragma once

#include "weightsum/charsum.hpp"

namespace weightsum {

// Builders for the worked examples: each returns a presentation whose
// constraints encode the example's proven weight group, so that
// validate_character accepts exactly the admissible value tuples.

// Group ring of the abelian group on K_1..K_n with K_i^l = 1 (free if l = 0).
PresentationPtr build_group_ring(unsigned n, std::uint64_t l);

// Restricted quantum group u_{q,l}(g) of rank n: the K_i keep order l, the
// e_i, f_i are killed by every weight, and [e_i, f_i] forces K_i to +-1.
PresentationPtr build_uql(unsigned n, std::uint64_t l);

// Borel half: only the e_i are present; every value tuple of l-th roots is
// admissible.
PresentationPtr build_borel(unsigned n, std::uint64_t l);

// Quantum affine space: x_i killed, K_i of order l.
PresentationPtr build_affine_space(unsigned n, std::uint64_t l);

// Quantized Virasoro: grouplike T of infinite order; c and the chosen e_m
// are killed by every weight.
PresentationPtr build_virasoro(const std::vector<long long>& e_indices);

// Quantum GL(n) / SL(n): diagonal u_ii behave diagonally under convolution,
// off-diagonal u_ij are killed; SL adds the determinant relation
// u_11 ... u_nn = 1.
PresentationPtr build_quantum_gl(unsigned n);
PresentationPtr build_quantum_sl(unsigned n);

// An element given as a grouplike part sum_g a_g g plus (optionally) terms
// inside H V H, which every weight kills.
struct GradedElement {
  std::vector<std::pair<GroupWord, FieldElement>> grouplike_terms;
  bool has_hvh_terms = false;
};

// Sigma_Pi(h) = |Pi| * sum over the a_g with g in G_Pi(H); brute force sums
// gamma over the grouplike part directly.
SigmaReport sigma_graded(const CharacterGroup& pi, const GradedElement& element);

// Sigma_Pi on a Virasoro monomial word: zero on words containing c or any
// e_m, and the divisibility law |Pi| * [ |Pi| divides m ] on T^m.
SigmaReport sigma_virasoro(const CharacterGroup& pi, const Monomial& word);

// All characters of a presentation whose grouplike values range over the
// l-th roots of unity available in the field (annihilated generators at 0).
// Exhaustive enumeration: the builders' constraint encodings are tested
// against this.
std::vector<Character> enumerate_characters(const PresentationPtr& pres, const FieldPtr& field,
                                            std::uint64_t l);

}  // namespace weightsum
