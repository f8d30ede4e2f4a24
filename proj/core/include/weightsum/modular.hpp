#pragma once

#include <cstdint>
#include <vector>

#include "weightsum/charsum.hpp"

namespace weightsum {

// Integer coefficients alpha_i of g_{f0-1}(T) = sum alpha_i T^i, the unique
// integers with sum_i alpha_i C(X+f0-1-i, f0) = X^{f0} in Q[X].
struct PhiPolynomial {
  std::uint64_t f0 = 0;
  std::vector<Int> coeffs;
};

// Solves the triangular system by successive evaluation at X = 1, 2, ...;
// integrality of the solution is asserted (a failure would falsify the
// theorem, so it is a hard error, not a rounding concern).
PhiPolynomial eulerian_coeffs(std::uint64_t f0);

// phi_p(f, z) = sum_{l=1}^{p} (l^f mod p) z^l, literally.
FieldElement varphi_direct(const FieldPtr& field, std::uint64_t f, const FieldElement& z);

// Closed form z (1-z)^{p-1-f0} g_{f0-1}(z) with f == f0 mod (p-1), 0 < f0 < p.
FieldElement varphi_closed(const FieldPtr& field, std::uint64_t f, const FieldElement& z);

// Multinomial coefficient n! / prod(parts!) mod p by per-digit base-p
// reduction (generalized Lucas).
std::uint64_t multinomial_mod(std::uint64_t p, const std::vector<std::uint64_t>& parts);

// Decides p | C(n; parts) through the two clauses of the max-part lemma
// alone; an independent route from multinomial_mod.
bool lnom_divisible(std::uint64_t p, const std::vector<std::uint64_t>& parts);

// Matrix permanent by Ryser inclusion-exclusion; for n <= 6 the direct
// permutation sum is run too and must agree.
FieldElement permanent(const std::vector<std::vector<FieldElement>>& a);
FieldElement permanent_direct(const std::vector<std::vector<FieldElement>>& a);
FieldElement determinant(const std::vector<std::vector<FieldElement>>& a);

// Sigma over an elementary abelian p-group with basis `basis` at a product
// of pseudo-primitive letters whose values form the matrix a_{ij} =
// basis[j](letters[i]).  This is the T8 kernel: zero unless (p-1) | n and
// 0 < k <= n/(p-1); permanent when k = n; otherwise the coefficient
// expansion over ordered set partitions with (p-1) | |I_j|.
FieldElement sigma_elementary_abelian(const std::vector<Character>& basis,
                                      const std::vector<std::string>& letters);

// Abelian split: Sigma_Pi(h) = Sigma_{Pi'}(g_J h_{[n]\J}) * Sigma_{Pi_p}(h_J)
// with J the pseudo-primitive letters.
SigmaReport sigma_abelian_split(const CharacterGroup& pi, const Monomial& skew_product,
                                bool with_brute = true);

// The main abelian closed form: no letter pseudo-primitive, char does not
// divide |Pi|; (-1)^n |Pi| prod f_i sum_{I in S} (-1)^{|I|}.
SigmaReport sigma_abelian_closed(const CharacterGroup& pi, const Monomial& skew_product,
                                 bool with_brute = true);

// Pseudo-primitive products in characteristic p: the T5/T6/T8 dispatch.
SigmaReport sigma_pseudo_charp(const CharacterGroup& pi, const Monomial& skew_product,
                               bool with_brute = true);

// Characteristic 2, single almost-primitive letter: 0 for odd |Pi|, 0 when
// 4 | |Pi|, else gamma(h) for any gamma of order 2.
SigmaReport tunproved_char2(const CharacterGroup& pi, const std::string& skew_letter,
                            bool with_brute = true);

// S_0 = sum_j C(n, mj) computed twice: direct binomial sum and the
// roots-of-unity filter evaluated exactly in Q(zeta_m); asserts equality.
Int binomial_skip_sum(std::uint64_t n, std::uint64_t m);

Int binomial(std::uint64_t n, std::uint64_t k);

}  // namespace weightsum
