#include <benchmark/benchmark.h>

#include "iwahori/admissible.hpp"
#include "iwahori/datum_constructors.hpp"
#include "iwahori/loop_check.hpp"
#include "iwahori/sigma_conjugacy.hpp"

using namespace iwahori;

static void BM_EnumerateGL4(benchmark::State& state) {
  auto tw = split_twist("gl4");
  const auto& G = tw->group();
  for (auto _ : state) {
    std::size_t n = 0;
    G.for_each_up_to_length(state.range(0), {G.identity()}, [&](const Element&) {
      ++n;
      return true;
    });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_EnumerateGL4)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_AdmissibleSp4(benchmark::State& state) {
  auto tw = split_twist("sp4");
  const IntVector mu{state.range(0), state.range(1)};
  for (auto _ : state) benchmark::DoNotOptimize(admissible_set(*tw, mu).elements.size());
}
BENCHMARK(BM_AdmissibleSp4)->Args({1, 0})->Args({1, 1})->Args({2, 1})->Unit(benchmark::kMillisecond);

static void BM_BruhatGL3(benchmark::State& state) {
  auto tw = split_twist("gl3");
  const auto& G = tw->group();
  auto elems = G.enumerate_up_to_length(4, {G.identity()});
  for (auto _ : state) {
    std::size_t n = 0;
    for (const auto& v : elems)
      for (const auto& w : elems) n += G.bruhat_leq(v, w);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_BruhatGL3)->Unit(benchmark::kMillisecond);

static void BM_BofGMu(benchmark::State& state) {
  auto tw = split_twist("gl3");
  for (auto _ : state) benchmark::DoNotOptimize(b_of_g_mu(*tw, {2, 1, 0}).size());
}
BENCHMARK(BM_BofGMu)->Unit(benchmark::kMillisecond);

static void BM_LoopSweep(benchmark::State& state) {
  const int case_no = static_cast<int>(state.range(0));
  LaurentRing ring = case_ring(case_no, state.range(1), false);
  const LoopMatrix lift = translation_lift(ring, case_parahoric(case_no));
  for (auto _ : state) benchmark::DoNotOptimize(verify_case(case_no, ring, lift).all_pass);
}
BENCHMARK(BM_LoopSweep)->Args({1, 7})->Args({2, 7})->Args({3, 7})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
