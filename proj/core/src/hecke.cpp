#include "weightsum/hecke.hpp"

#include <functional>
#include <sstream>

namespace weightsum {

std::vector<std::vector<int>> cartan_matrix(char type, unsigned rank) {
  auto chain = [&](unsigned n) {
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (unsigned i = 0; i < n; ++i) {
      a[i][i] = 2;
      if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
  };
  switch (type) {
    case 'A': {
      require(rank >= 1 && rank <= 8, "InvalidSpec", "A_n supported for 1 <= n <= 8");
      return chain(rank);
    }
    case 'B': {
      require(rank >= 2 && rank <= 8, "InvalidSpec", "B_n supported for 2 <= n <= 8");
      auto a = chain(rank);
      a[rank - 1][rank - 2] = -2;  // short last root
      return a;
    }
    case 'C': {
      require(rank >= 2 && rank <= 8, "InvalidSpec", "C_n supported for 2 <= n <= 8");
      auto a = chain(rank);
      a[rank - 2][rank - 1] = -2;  // long last root
      return a;
    }
    case 'D': {
      require(rank >= 3 && rank <= 8, "InvalidSpec", "D_n supported for 3 <= n <= 8");
      auto a = chain(rank - 1);
      for (auto& row : a) row.push_back(0);
      a.push_back(std::vector<int>(rank, 0));
      a[rank - 1][rank - 1] = 2;
      a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1;  // fork at node rank-3
      return a;
    }
    case 'E': {
      require(rank >= 6 && rank <= 8, "InvalidSpec", "E_n supported for 6 <= n <= 8");
      // Bourbaki: node 2 attaches to node 4 of the A-chain 1-3-4-5-6(-7-8).
      auto a = std::vector<std::vector<int>>(rank, std::vector<int>(rank, 0));
      for (unsigned i = 0; i < rank; ++i) a[i][i] = 2;
      auto link = [&](unsigned i, unsigned j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
      link(1, 3);
      link(3, 4);
      link(4, 5);
      link(5, 6);
      if (rank >= 7) link(6, 7);
      if (rank == 8) link(7, 8);
      link(2, 4);
      return a;
    }
    case 'F': {
      require(rank == 4, "InvalidSpec", "F_4 has rank 4");
      auto a = chain(4);
      a[2][1] = -2;  // double edge 2=>3, roots 3,4 short
      return a;
    }
    case 'G': {
      require(rank == 2, "InvalidSpec", "G_2 has rank 2");
      return {{2, -1}, {-3, 2}};
    }
    default:
      fail("InvalidSpec", std::string("unknown root system type ") + type);
  }
}

std::vector<bool> short_roots(char type, unsigned rank) {
  std::vector<bool> is_short(rank, true);  // simply laced: all short
  switch (type) {
    case 'B':
      for (unsigned i = 0; i + 1 < rank; ++i) is_short[i] = false;
      break;
    case 'C':
      is_short[rank - 1] = false;
      break;
    case 'F':
      is_short[0] = is_short[1] = false;
      break;
    case 'G':
      is_short[1] = false;
      break;
    default:
      break;
  }
  return is_short;
}

KilledRoots killed_roots(const RootSystemData& data, std::uint64_t characteristic) {
  KilledRoots result;
  for (const auto& comp : data.components) {
    auto cartan = cartan_matrix(comp.type, comp.rank);
    std::vector<bool> killed(comp.rank, false);
    if (characteristic != 2) {
      killed.assign(comp.rank, true);
    } else {
      for (unsigned i = 0; i < comp.rank; ++i)
        for (unsigned j = i + 1; j < comp.rank; ++j) {
          int bond = cartan[i][j] * cartan[j][i];
          if (bond == 0) continue;
          if (bond == 1 || bond == 3) {
            // A_2 subsystem (a triple edge contains two of them): both die.
            killed[i] = killed[j] = true;
          } else {
            // B_2 subsystem: the long end dies; A_ij = -2 marks row i short.
            if (cartan[i][j] == -2)
              killed[j] = true;
            else
              killed[i] = true;
          }
        }
    }
    for (bool k : killed)
      if (!k) ++result.survivor_count;
    result.killed.push_back(std::move(killed));
  }
  return result;
}

WeightGroupDescription smash_weights(const RootSystemData& data, const FieldPtr& field) {
  WeightGroupDescription d;
  std::uint64_t p = field->characteristic();
  KilledRoots k = killed_roots(data, p);
  d.weyl_collapsed = (p == 2);
  d.additive_rank = data.central_rank + static_cast<unsigned>(p == 2 ? k.survivor_count : 0);
  std::ostringstream os;
  if (d.weyl_collapsed)
    os << "Gamma = eps_W x (V')^*, additive of rank " << d.additive_rank;
  else
    os << "Gamma = Gamma_W x V_0^*, additive part of rank " << d.additive_rank;
  d.text = os.str();
  return d;
}

SigmaReport sigma_alpha_power(const std::vector<FieldElement>& generator_values, std::uint64_t n) {
  require(!generator_values.empty(), "InvalidSpec", "need at least one generator");
  require(n >= 1, "InvalidSpec", "power must be >= 1");
  const FieldPtr& F = generator_values[0].field();
  require(F->characteristic() == 2, "WrongCharacteristic", "this computation lives in char 2");
  std::size_t k = generator_values.size();
  require(k <= 16, "InvalidSpec", "generator count capped at 16");

  // Independence over F_2: no nonempty subset of the values may vanish.
  for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
    FieldElement s = F->zero();
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1ull << i)) s = s + generator_values[i];
    if (s.is_zero()) fail("DependentGenerators", "subset of generators sums to zero");
  }

  // Brute force: all 2^k characters evaluate alpha_s^n at their subset sum.
  FieldElement brute = F->zero();
  for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
    FieldElement s = F->zero();
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1ull << i)) s = s + generator_values[i];
    brute = brute + s.pow(static_cast<long long>(n));
  }

  // Closed form: positive compositions l_1 + ... + l_k = n with the mod-2
  // multinomial coefficient.
  FieldElement closed = F->zero();
  std::vector<std::uint64_t> parts(k, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i + 1 == k) {
      if (left == 0) return;
      parts[i] = left;
      if (multinomial_mod(2, parts) == 1) {
        FieldElement term = F->one();
        for (std::size_t j = 0; j < k; ++j)
          term = term * generator_values[j].pow(static_cast<long long>(parts[j]));
        closed = closed + term;
      }
      return;
    }
    for (std::uint64_t l = 1; l + (k - i - 1) <= left; ++l) {
      parts[i] = l;
      rec(i + 1, left - l);
    }
  };
  rec(0, n);
  return make_report(brute, closed, "T7.alpha_power");
}

}  // namespace weightsum
