#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "weightsum/error.hpp"

namespace weightsum {

// Finite groups stored extensionally as multiplication tables over element
// indices.  Index 0 is the identity.  All the weight groups in this library
// are desk scale, so there is no attempt at anything cleverer.
struct GroupTable {
  std::size_t n = 0;
  std::vector<std::size_t> table;    // row-major, table[i*n+j] = i*j
  std::vector<std::size_t> inverse;  // two-sided inverses

  std::size_t mul(std::size_t i, std::size_t j) const { return table[i * n + j]; }
  std::size_t inv(std::size_t i) const { return inverse[i]; }
  std::size_t size() const { return n; }

  // Identity row/column, two-sided inverses, and (for n <= 64) exhaustive
  // associativity.  Throws on violation.
  void validate() const;
};

template <class E>
struct FiniteGroup {
  std::vector<E> elements;  // elements[0] is the identity
  GroupTable table;
  std::vector<std::size_t> generator_indices;

  std::size_t order() const { return elements.size(); }
  const E& identity() const { return elements[0]; }
};

// Breadth-first closure of a generating set under an abstract product.  The
// identity is derived as g * g^{-1} from the first generator.  `key` must
// produce a canonical string per element (used for dedup).  Throws
// CapExceeded if more than `cap` elements appear.
//
// Only |G| * #generators products are computed; the rest of the table is
// derived through the parent decomposition e_j = e_parent * gen_k, which is
// valid because the underlying product is associative.
template <class E, class Mul, class Inv, class Key>
FiniteGroup<E> close_group(const std::vector<E>& generators, Mul&& mul, Inv&& inv, Key&& key,
                           std::size_t cap) {
  require(!generators.empty(), "InvalidSpec", "closure needs at least one generator");
  require(cap >= 1, "InvalidSpec", "closure cap must be >= 1");

  FiniteGroup<E> g;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::pair<std::size_t, std::size_t>> parent;  // (parent element, generator slot)
  auto push = [&](const E& e, std::size_t from, std::size_t slot) -> std::size_t {
    auto k = key(e);
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    if (g.elements.size() >= cap) fail("CapExceeded", "group closure exceeded cap");
    g.elements.push_back(e);
    parent.emplace_back(from, slot);
    index.emplace(std::move(k), g.elements.size() - 1);
    return g.elements.size() - 1;
  };

  push(mul(generators[0], inv(generators[0])), 0, 0);  // identity at index 0
  for (std::size_t k = 0; k < generators.size(); ++k)
    g.generator_indices.push_back(push(generators[k], 0, k));

  // BFS: right-multiply every known element by every generator, recording
  // the products.  gen_product[i][k] = index of e_i * gen_k.
  std::vector<std::vector<std::size_t>> gen_product;
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    gen_product.emplace_back(generators.size());
    for (std::size_t k = 0; k < generators.size(); ++k)
      gen_product[i][k] = push(mul(g.elements[i], generators[k]), i, k);
  }

  std::size_t n = g.elements.size();
  g.table.n = n;
  g.table.table.assign(n * n, 0);
  g.table.inverse.assign(n, n);
  // Fill columns in discovery order: column 0 is the identity map, a column
  // for e_j = e_p * gen_k is the composition of column p with gen slot k.
  for (std::size_t i = 0; i < n; ++i) g.table.table[i * n + 0] = i;
  for (std::size_t j = 1; j < n; ++j) {
    auto [p, k] = parent[j];
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t via = g.table.table[i * n + p];
      g.table.table[i * n + j] = gen_product[via][k];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (g.table.table[i * n + j] == 0) g.table.inverse[i] = j;
  g.table.validate();
  return g;
}

// Subgroup and quotient machinery on bare tables.  Subgroups are sorted
// index vectors into the parent.
std::vector<std::size_t> subgroup_closure(const GroupTable& g, std::vector<std::size_t> seed);
std::vector<std::size_t> commutator_subgroup(const GroupTable& g);
std::vector<std::size_t> sylow_subgroup(const GroupTable& g, std::uint64_t p);
std::vector<std::size_t> hall_complement(const GroupTable& g, std::uint64_t p);  // NoComplement
std::size_t element_order(const GroupTable& g, std::size_t x);
bool is_abelian(const GroupTable& g);
bool is_normal(const GroupTable& g, const std::vector<std::size_t>& sub);
bool is_solvable(const GroupTable& g);
bool is_subgroup(const GroupTable& g, const std::vector<std::size_t>& sub);

// Reindexed multiplication table of a subgroup (sub[0] need not be 0; the
// identity is located and moved to index 0 of the new table).
struct SubgroupView {
  std::vector<std::size_t> elements;  // parent indices, position 0 = identity
  GroupTable table;
};
SubgroupView subgroup_table(const GroupTable& g, const std::vector<std::size_t>& sub);

struct Quotient {
  std::vector<std::size_t> reps;      // lowest-index coset representatives, reps[0] in N
  std::vector<std::size_t> coset_of;  // parent index -> position in reps
  GroupTable table;                   // induced product on cosets
};
Quotient quotient_group(const GroupTable& g, const std::vector<std::size_t>& normal_sub);

template <class E>
FiniteGroup<E> materialize_subgroup(const FiniteGroup<E>& g, const std::vector<std::size_t>& sub) {
  SubgroupView view = subgroup_table(g.table, sub);
  FiniteGroup<E> out;
  for (std::size_t idx : view.elements) out.elements.push_back(g.elements[idx]);
  out.table = std::move(view.table);
  // every element generates; callers needing a minimal set can recompute
  for (std::size_t i = 0; i < out.elements.size(); ++i) out.generator_indices.push_back(i);
  return out;
}

}  // namespace weightsum
