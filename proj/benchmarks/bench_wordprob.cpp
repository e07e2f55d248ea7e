#include <benchmark/benchmark.h>

#include <random>

#include "wordprob/cayley.hpp"
#include "wordprob/dehn.hpp"
#include "wordprob/presentations.hpp"
#include "wordprob/rewriting.hpp"
#include "wordprob/sequences.hpp"
#include "wordprob/words.hpp"

using namespace wordprob;

namespace {
  GroupWord random_word(std::mt19937& rng, std::size_t n_gens, std::size_t len) {
    GroupWord w;
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back({static_cast<std::uint32_t>(rng() % n_gens), rng() % 2 ? 1 : -1});
    }
    return w;
  }
}  // namespace

static void BM_free_reduce(benchmark::State& state) {
  std::mt19937 rng(1);
  auto         w = random_word(rng, 2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(free_reduce(w));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_free_reduce)->RangeMultiplier(4)->Range(16, 1 << 16)->Complexity();

static void BM_dehn_solve(benchmark::State& state) {
  auto         p   = catalog::surface(2);
  auto         sym = symmetrize(p);
  std::mt19937 rng(2);
  GroupWord    w;
  for (int i = 0; i < state.range(0); ++i) {
    auto u = random_word(rng, 4, 3);
    w      = w * u * p.relators()[0] * invert(u);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(dehn_solve(w, sym, true));
  }
  state.SetComplexityN(static_cast<std::int64_t>(w.size()));
}
BENCHMARK(BM_dehn_solve)->RangeMultiplier(2)->Range(1, 64)->Complexity();

static void BM_search_equivalence(benchmark::State& state) {
  auto sys = to_rewrite_system(catalog::ceijtin());
  auto a   = parse_word("aaa", sys);
  auto b   = parse_word("eaaa", sys);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        search_equivalence(a, b, sys, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_search_equivalence)->RangeMultiplier(4)->Range(64, 16384);

static void BM_is_power_free(benchmark::State& state) {
  auto w = thue_morse_prefix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_power_free(w, 3));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_is_power_free)->RangeMultiplier(2)->Range(256, 8192)->Complexity(benchmark::oNSquared);

static void BM_todd_coxeter(benchmark::State& state) {
  // <a, b | a^2, b^3, (ab)^n>: orders 6, 12, 24, 60 for n = 2..5.
  auto              names = GeneratorNames::standard(2);
  GroupPresentation p(names, {parse_word("aa", names), parse_word("bbb", names),
                              power(parse_word("ab", names), static_cast<int>(state.range(0)))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(todd_coxeter(p, 10000));
  }
}
BENCHMARK(BM_todd_coxeter)->DenseRange(2, 5);
BENCHMARK_MAIN();
