#pragma once

#include "weightsum/charsum.hpp"

namespace weightsum {

struct ConstructionResult {
  PresentationPtr presentation;
  CharacterGroup group;
  Monomial monomial;
  FieldElement target;
  FieldElement achieved;  // always re-verified by brute force
};

// The Hopf algebra with one grouplike g of infinite order and skew letters
// h_1..h_n with Delta(h_i) = g (x) h_i + h_i (x) 1; its weights are the
// pairs (a, z) in R^n x R^x.
PresentationPtr build_hn(unsigned n);

// Sym(h) for an abelian Lie algebra: n primitive letters, weights under
// addition.  Realizes Sigma = r over (Z/pZ)^k for 0 < k <= n/(p-1): the
// partition construction with gamma_1(h_1) = (-1)^k r.
ConstructionResult construct_lie(unsigned n, unsigned k, const FieldElement& r);

// Cyclic groups of even order m on H_n: choose the a_i with
// prod a_i = r (sm)^{-1} (1-zeta)^n, s = sum_j C(n, mj).
ConstructionResult construct_cyclic(std::uint64_t m, unsigned n, const FieldElement& r);

// Abelian Pi = Z/d_1 + ... + Z/d_k with d_i | d_{i+1}: the tensor
// construction.  n >= k repeats the last letter (needs d_k even and k >= 2
// unless n = k, since the solved coefficient must appear linearly);
// n < k adds a free grouplike block and works for any chain.
ConstructionResult construct_abelian(const std::vector<std::uint64_t>& d, unsigned n,
                                     const FieldElement& r);

}  // namespace weightsum
