#pragma once

#include "weightsum/charsum.hpp"
#include "weightsum/modular.hpp"

namespace weightsum {

struct RootComponent {
  char type = 'A';      // A..G
  unsigned rank = 1;
};

// A reductive root datum: simple components plus the rank of the central
// (Weyl-fixed) block.
struct RootSystemData {
  std::vector<RootComponent> components;
  unsigned central_rank = 0;
};

// Cartan matrix in the Bourbaki numbering, rows A_ij = 2(a_i,a_j)/(a_i,a_i).
std::vector<std::vector<int>> cartan_matrix(char type, unsigned rank);

// true marks a short simple root; simply laced components count as all short.
std::vector<bool> short_roots(char type, unsigned rank);

struct KilledRoots {
  // killed[c][i]: simple root i of component c is killed by every weight.
  std::vector<std::vector<bool>> killed;
  std::size_t survivor_count = 0;
};

// char != 2: every root dies (the reflection argument).  char = 2: scan the
// Dynkin edges; a single edge kills both ends, a double edge kills the long
// end, a triple edge kills both.  What survives is exactly the unique short
// simple root of each component that is not G_2 and has one short root.
KilledRoots killed_roots(const RootSystemData& data, std::uint64_t characteristic);

struct WeightGroupDescription {
  bool weyl_collapsed = false;  // char 2: every weight is 1 on W
  unsigned additive_rank = 0;   // rank of the surviving additive block (V')^*
  std::string text;
};

WeightGroupDescription smash_weights(const RootSystemData& data, const FieldPtr& field);

// Sigma over Pi = (Z/2Z)^k at alpha_s^n, char 2: the positive-composition
// multinomial sum against the brute-force subset-sum expansion.  Generators
// are given by their values at alpha_s; independence means no nonempty
// subset of the values sums to zero.
SigmaReport sigma_alpha_power(const std::vector<FieldElement>& generator_values, std::uint64_t n);

}  // namespace weightsum
