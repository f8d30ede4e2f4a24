// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Every tolerance here is exact field equality; the randomized
// counts and parameter sweeps are pinned in code.

#include <chrono>
#include <cstdio>
#include <random>

#include "weightsum/charsum.hpp"
#include "weightsum/constructions.hpp"
#include "weightsum/hecke.hpp"
#include "weightsum/modular.hpp"
#include "weightsum/qexamples.hpp"
#include "weightsum/verification.hpp"

using namespace weightsum;

namespace {

int failures = 0;
double total_seconds = 0;

template <class F>
void criterion(int number, const std::string& label, F&& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string detail;
  try {
    detail = body();
    ok = true;
  } catch (const std::exception& e) {
    detail = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  total_seconds += secs;
  if (!ok) ++failures;
  std::printf("%s criterion %d: %s (%s, %.2fs)\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              detail.c_str(), secs);
  std::fflush(stdout);
}

std::string run(const std::string& suite, std::uint64_t seed, std::size_t instances,
                std::size_t max_order, double budget_seconds) {
  auto start = std::chrono::steady_clock::now();
  SuiteOptions opts;
  opts.seed = seed;
  opts.instances = instances;
  opts.max_order = max_order;
  SuiteResult r = run_suite(suite, opts);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!r.ok())
    throw Error("CriterionFailed", std::to_string(r.failures) + " failures, first: " +
                                       (r.messages.empty() ? "?" : r.messages[0]));
  if (budget_seconds > 0 && secs > budget_seconds)
    throw Error("CriterionFailed", "exceeded time budget: " + std::to_string(secs) + "s");
  return std::to_string(r.checks) + " checks";
}

std::string constructions_criterion() {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> small(-6, 6);
  std::size_t achieved = 0;

  // construct_lie across p in {2,3,5}, k <= n/(p-1) <= 4, 25 targets.
  {
    std::vector<std::pair<FieldSpec, std::uint64_t>> fields = {
        {FieldSpec::prime_ext(2, {1, 1, 1}), 2},
        {FieldSpec::prime(3), 3},
        {FieldSpec::prime(5), 5}};
    std::size_t count = 0;
    while (count < 25) {
      for (const auto& [spec, p] : fields) {
        auto F = Field::make(spec);
        for (unsigned mult = 1; mult <= 4 && count < 25; ++mult) {
          unsigned n = static_cast<unsigned>(p - 1) * mult;
          for (unsigned k = 1; k <= mult && count < 25; ++k) {
            FieldElement r = F->from_integer(small(rng));
            if (r.is_zero() && p == 2 && k == n) r = F->one();
            ConstructionResult res = construct_lie(n, k, r);
            if (res.achieved != r) throw Error("CriterionFailed", "lie target missed");
            std::uint64_t expect = 1;
            for (unsigned j = 0; j < k; ++j) expect *= p;
            if (res.group.order() != expect)
              throw Error("CriterionFailed", "lie characters are dependent");
            ++count;
          }
        }
      }
    }
    achieved += count;
  }

  // construct_cyclic with m in {2,4,6}, n <= 6, 25 targets (zero included).
  {
    auto F = Field::make(FieldSpec::cyclotomic(12));
    std::size_t count = 0;
    while (count < 25) {
      for (std::uint64_t m : {2, 4, 6}) {
        for (unsigned n = 1; n <= 6 && count < 25; ++n) {
          FieldElement r = F->from_integer(small(rng));
          ConstructionResult res = construct_cyclic(m, n, r);
          if (res.achieved != r) throw Error("CriterionFailed", "cyclic target missed");
          if (res.group.order() != m) throw Error("CriterionFailed", "cyclic order wrong");
          if (element_order(res.group.table, res.group.generator_indices[0]) != m)
            throw Error("CriterionFailed", "cyclic generator order wrong");
          ++count;
        }
      }
    }
    achieved += count;
  }

  // construct_abelian with invariant-factor chains up to Z/2 x Z/4.
  {
    auto F = Field::make(FieldSpec::cyclotomic(8));
    struct Shape {
      std::vector<std::uint64_t> chain;
      unsigned n;
    };
    std::vector<Shape> shapes = {{{2}, 1},    {{4}, 1},    {{2, 2}, 1}, {{2, 2}, 2},
                                 {{2, 2}, 3}, {{2, 4}, 1}, {{2, 4}, 2}, {{2, 4}, 3}};
    auto check_type = [](const GroupTable& table, const std::vector<std::uint64_t>& d) {
      std::uint64_t exponent = d.back();
      for (std::uint64_t m = 1; m <= exponent; ++m) {
        if (exponent % m != 0) continue;
        std::size_t solutions = 0;
        for (std::size_t x = 0; x < table.size(); ++x) {
          std::size_t acc = 0;
          for (std::uint64_t t = 0; t < m; ++t) acc = table.mul(acc, x);
          if (acc == 0) ++solutions;
        }
        std::uint64_t expected = 1;
        for (auto di : d) expected *= std::gcd(m, di);
        if (solutions != expected) return false;
      }
      return true;
    };
    std::size_t count = 0;
    while (count < 25) {
      for (const auto& shape : shapes) {
        if (count >= 25) break;
        FieldElement r = F->from_integer(small(rng));
        ConstructionResult res = construct_abelian(shape.chain, shape.n, r);
        if (res.achieved != r) throw Error("CriterionFailed", "abelian target missed");
        if (!check_type(res.group.table, shape.chain))
          throw Error("CriterionFailed", "abelian group has the wrong invariant factors");
        ++count;
      }
    }
    achieved += count;
  }
  return std::to_string(achieved) + " targets achieved";
}

}  // namespace

int main() {
  criterion(1, "P5 suite, 200 randomized grouplike instances, |Pi| <= 128, under 10s",
            [] { return run("P5", 1, 200, 128, 10.0); });
  criterion(2, "T3 suite, 200 randomized skew instances, all cases, witness independence",
            [] { return run("T3", 1, 200, 64, 0); });
  criterion(3, "phi suite: exhaustive p <= 13 agreement, Eulerian coefficients, Bernoulli values",
            [] { return run("phi", 1, 0, 0, 0); });
  criterion(4, "T5/T6/T8 suite: elementary abelian sweeps p in {2,3}, k <= 3, n <= 6",
            [] { return run("T5T6T8", 1, 144, 0, 0); });
  criterion(5, "constructions achieve 25 random targets each (lie, cyclic, abelian)",
            [] { return constructions_criterion(); });
  criterion(6, "Hecke suite: killed roots on A..G, ranks <= 8; alpha_s powers k <= 4, n <= 12",
            [] { return run("T7", 1, 0, 0, 0); });
  criterion(7, "identity suites: E0/E3/E4 + recursions (200), L1 resampling (50), Ppower/Tsk",
            [] {
              std::string a = run("E3E4", 1, 200, 48, 0);
              std::string b = run("L1", 1, 50, 48, 0);
              std::string c = run("Ppower", 1, 40, 64, 0);
              std::string d = run("Tsk", 1, 40, 64, 0);
              return a + " / " + b + " / " + c + " / " + d;
            });
  criterion(8, "example catalog laws: u_{q,l}, Virasoro, quantum GL/SL, group rings",
            [] { return run("qexamples", 1, 0, 0, 0); });
  criterion(9, "S_0 identity: direct binomial sum = roots-of-unity filter, m <= 8, n <= 20",
            [] { return run("S0", 1, 0, 0, 0); });

  std::printf("%s: %d failing criteria, total %.1fs%s\n", failures == 0 ? "ALL PASS" : "FAILED",
              failures, total_seconds, total_seconds > 60.0 ? " (over the 60s budget!)" : "");
  if (total_seconds > 60.0) ++failures;
  return failures == 0 ? 0 : 1;
}
