#include "weightsum/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "weightsum/ring.hpp"  // is_prime_u64

namespace weightsum {

void GroupTable::validate() const {
  require(n >= 1 && table.size() == n * n && inverse.size() == n, "InvalidSpec",
          "malformed group table");
  for (std::size_t i = 0; i < n; ++i) {
    require(mul(0, i) == i && mul(i, 0) == i, "InvalidSpec", "index 0 is not an identity");
    require(inv(i) < n, "InvalidSpec", "missing inverse entry");
    require(mul(i, inv(i)) == 0 && mul(inv(i), i) == 0, "InvalidSpec", "missing two-sided inverse");
  }
  // Latin square: rows and columns are permutations.
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      require(!seen_row[mul(i, j)], "InvalidSpec", "row is not a permutation");
      require(!seen_col[mul(j, i)], "InvalidSpec", "column is not a permutation");
      seen_row[mul(i, j)] = true;
      seen_col[mul(j, i)] = true;
    }
  }
  if (n <= 64) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          require(mul(mul(a, b), c) == mul(a, mul(b, c)), "InvalidSpec",
                  "multiplication table is not associative");
  }
}

std::vector<std::size_t> subgroup_closure(const GroupTable& g, std::vector<std::size_t> seed) {
  std::vector<bool> in(g.n, false);
  std::vector<std::size_t> frontier;
  auto add = [&](std::size_t x) {
    if (!in[x]) {
      in[x] = true;
      frontier.push_back(x);
    }
  };
  add(0);
  for (std::size_t s : seed) add(s);
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    std::size_t a = frontier[i];
    add(g.inv(a));
    for (std::size_t j = 0; j < frontier.size(); ++j) {
      add(g.mul(a, frontier[j]));
      add(g.mul(frontier[j], a));
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.n; ++x)
    if (in[x]) out.push_back(x);
  return out;
}

std::vector<std::size_t> commutator_subgroup(const GroupTable& g) {
  std::vector<std::size_t> comms;
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t b = 0; b < g.n; ++b)
      comms.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_closure(g, comms);
}

std::size_t element_order(const GroupTable& g, std::size_t x) {
  require(x < g.n, "NotAMember", "element index out of range");
  std::size_t cur = x, k = 1;
  while (cur != 0) {
    cur = g.mul(cur, x);
    ++k;
  }
  return k;
}

bool is_abelian(const GroupTable& g) {
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t b = a + 1; b < g.n; ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_subgroup(const GroupTable& g, const std::vector<std::size_t>& sub) {
  std::vector<bool> in(g.n, false);
  for (std::size_t x : sub) {
    if (x >= g.n) return false;
    in[x] = true;
  }
  if (!in[0]) return false;
  for (std::size_t a : sub) {
    if (!in[g.inv(a)]) return false;
    for (std::size_t b : sub)
      if (!in[g.mul(a, b)]) return false;
  }
  return true;
}

bool is_normal(const GroupTable& g, const std::vector<std::size_t>& sub) {
  std::vector<bool> in(g.n, false);
  for (std::size_t x : sub) in[x] = true;
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t x : sub)
      if (!in[g.mul(g.mul(a, x), g.inv(a))]) return false;
  return true;
}

bool is_solvable(const GroupTable& g) {
  // Derived series on nested subgroup views.
  SubgroupView view;
  view.elements.resize(g.n);
  std::iota(view.elements.begin(), view.elements.end(), 0);
  view.table = g;
  while (view.table.n > 1) {
    auto derived = commutator_subgroup(view.table);
    if (derived.size() == view.table.n) return false;  // perfect, not solvable
    SubgroupView next = subgroup_table(view.table, derived);
    for (auto& e : next.elements) e = view.elements[e];
    view = std::move(next);
  }
  return true;
}

SubgroupView subgroup_table(const GroupTable& g, const std::vector<std::size_t>& sub) {
  require(is_subgroup(g, sub), "InvalidSpec", "index set is not a subgroup");
  SubgroupView view;
  view.elements = sub;
  std::sort(view.elements.begin(), view.elements.end());
  // identity first, then ascending parent index
  auto it = std::find(view.elements.begin(), view.elements.end(), std::size_t{0});
  std::rotate(view.elements.begin(), it, it + 1);
  std::unordered_map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < view.elements.size(); ++i) pos[view.elements[i]] = i;
  std::size_t n = view.elements.size();
  view.table.n = n;
  view.table.table.assign(n * n, 0);
  view.table.inverse.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      view.table.table[i * n + j] = pos.at(g.mul(view.elements[i], view.elements[j]));
    view.table.inverse[i] = pos.at(g.inv(view.elements[i]));
  }
  return view;
}

namespace {

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t k = 1;
  while (n % p == 0) {
    n /= p;
    k *= p;
  }
  return k;
}

bool order_is_p_power(std::size_t ord, std::uint64_t p) {
  while (ord % p == 0) ord /= p;
  return ord == 1;
}

}  // namespace

std::vector<std::size_t> sylow_subgroup(const GroupTable& g, std::uint64_t p) {
  require(is_prime_u64(p), "NotPrime", "p must be prime");
  std::uint64_t target = p_part(g.n, p);
  std::vector<std::size_t> current = {0};
  // Greedy growth: a proper p-subgroup always extends by some p-element of
  // its normalizer, so scanning for the lowest-index element that keeps the
  // closure a p-group terminates at the full p-part.  Deterministic.
  while (current.size() < target) {
    bool grew = false;
    for (std::size_t x = 1; x < g.n && !grew; ++x) {
      if (!order_is_p_power(element_order(g, x), p)) continue;
      if (std::binary_search(current.begin(), current.end(), x)) continue;
      auto seed = current;
      seed.push_back(x);
      auto bigger = subgroup_closure(g, seed);
      if (bigger.size() <= target && order_is_p_power(bigger.size(), p)) {
        current = std::move(bigger);
        grew = true;
      }
    }
    require(grew, "InvalidSpec", "Sylow growth stalled; table is not a group");
  }
  return current;
}

namespace {

// Depth-first search for a subgroup of exact order `target`, extending by
// elements whose order divides `target`.  Visited closures are memoised.
bool hall_search(const GroupTable& g, std::vector<std::size_t>& current, std::uint64_t target,
                 std::set<std::vector<std::size_t>>& seen, std::vector<std::size_t>& out) {
  if (current.size() == target) {
    out = current;
    return true;
  }
  for (std::size_t x = 1; x < g.n; ++x) {
    if (target % element_order(g, x) != 0) continue;
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    auto seed = current;
    seed.push_back(x);
    auto bigger = subgroup_closure(g, seed);
    if (target % bigger.size() != 0) continue;
    if (!seen.insert(bigger).second) continue;
    if (hall_search(g, bigger, target, seen, out)) return true;
  }
  return false;
}

}  // namespace

std::vector<std::size_t> hall_complement(const GroupTable& g, std::uint64_t p) {
  require(is_solvable(g), "NoComplement", "Hall complements need a solvable group");
  std::uint64_t target = g.n / p_part(g.n, p);
  if (target == 1) return {0};
  if (is_abelian(g)) {
    // Unique complement: all elements of order coprime to p.
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < g.n; ++x)
      if (element_order(g, x) % p != 0) out.push_back(x);
    require(out.size() == target, "NoComplement", "abelian p'-part has wrong order");
    return out;
  }
  std::vector<std::size_t> current = {0}, out;
  std::set<std::vector<std::size_t>> seen;
  bool found = hall_search(g, current, target, seen, out);
  require(found, "NoComplement",
          "no Hall p'-subgroup found (violates Hall's theorem for solvable groups)");
  return out;
}

Quotient quotient_group(const GroupTable& g, const std::vector<std::size_t>& normal_sub) {
  require(is_subgroup(g, normal_sub), "NotNormal", "quotient by a non-subgroup");
  require(is_normal(g, normal_sub), "NotNormal", "subgroup is not normal");
  Quotient q;
  q.coset_of.assign(g.n, g.n);
  for (std::size_t x = 0; x < g.n; ++x) {
    if (q.coset_of[x] != g.n) continue;
    std::size_t rep = x;  // ascending scan makes reps lowest-index members
    q.reps.push_back(rep);
    for (std::size_t h : normal_sub) q.coset_of[g.mul(rep, h)] = q.reps.size() - 1;
  }
  std::size_t n = q.reps.size();
  q.table.n = n;
  q.table.table.assign(n * n, 0);
  q.table.inverse.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      q.table.table[i * n + j] = q.coset_of[g.mul(q.reps[i], q.reps[j])];
    q.table.inverse[i] = q.coset_of[g.inv(q.reps[i])];
  }
  q.table.validate();
  return q;
}

}  // namespace weightsum
