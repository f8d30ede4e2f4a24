#include <benchmark/benchmark.h>

#include <random>

#include "weightsum/constructions.hpp"
#include "weightsum/modular.hpp"

using namespace weightsum;

namespace {

std::vector<std::vector<FieldElement>> random_matrix(const FieldPtr& F, std::size_t n,
                                                     std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-5, 5);
  std::vector<std::vector<FieldElement>> a(n, std::vector<FieldElement>(n));
  for (auto& row : a)
    for (auto& x : row) x = F->from_integer(small(rng));
  return a;
}

void BM_PermanentRyser(benchmark::State& state) {
  auto F = Field::make(FieldSpec::prime(7));
  auto a = random_matrix(F, static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(permanent(a));
}
BENCHMARK(BM_PermanentRyser)->DenseRange(4, 10, 2);

void BM_PermanentDirect(benchmark::State& state) {
  auto F = Field::make(FieldSpec::prime(7));
  auto a = random_matrix(F, static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(permanent_direct(a));
}
BENCHMARK(BM_PermanentDirect)->DenseRange(4, 8, 2);

void BM_VarphiSweep(benchmark::State& state) {
  auto F = Field::make(FieldSpec::prime(13));
  for (auto _ : state) {
    for (std::uint64_t f = 1; f <= 36; ++f)
      for (std::uint64_t z = 0; z < 13; ++z)
        benchmark::DoNotOptimize(
            varphi_closed(F, f, F->from_integer(static_cast<long long>(z))));
  }
}
BENCHMARK(BM_VarphiSweep);

void BM_MultinomialMod(benchmark::State& state) {
  std::vector<std::uint64_t> parts = {7, 11, 13, 9};
  for (auto _ : state) benchmark::DoNotOptimize(multinomial_mod(3, parts));
}
BENCHMARK(BM_MultinomialMod);

void BM_BruteSumH3(benchmark::State& state) {
  auto F = Field::make(FieldSpec::cyclotomic(12));
  auto r = construct_cyclic(12, 3, F->from_integer(5));
  for (auto _ : state) benchmark::DoNotOptimize(sigma_brute(r.group, r.monomial));
}
BENCHMARK(BM_BruteSumH3);

void BM_CharacterClosure(benchmark::State& state) {
  auto F = Field::make(FieldSpec::cyclotomic(12));
  auto pres = build_hn(2);
  std::map<std::string, FieldElement> values{
      {"g", F->zeta()}, {"h1", F->from_integer(2)}, {"h2", F->from_integer(3)}};
  Character gen = validate_character(pres, F, values);
  for (auto _ : state) benchmark::DoNotOptimize(generate_character_group({gen}, 64).order());
}
BENCHMARK(BM_CharacterClosure);

}  // namespace

BENCHMARK_MAIN();
