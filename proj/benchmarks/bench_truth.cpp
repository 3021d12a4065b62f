#include <benchmark/benchmark.h>

#include "hflab/gen.hpp"
#include "hflab/truth.hpp"

using namespace hflab;

static void BM_TowerBuildAndSeal(benchmark::State& state) {
  for (auto _ : state) {
    TruthTower tower(DomainSpec::rank_cap(4), 6);
    // force the atomic diagram once
    benchmark::DoNotOptimize(tower.member(parse_formula("(in (c 0) (c 1))", Sig::Set)));
  }
}
BENCHMARK(BM_TowerBuildAndSeal);

static void BM_TowerQueryCold(benchmark::State& state) {
  FormulaGenOptions opt;
  opt.max_depth = 6;
  FormulaGen gen(opt, 0xC01D);
  std::vector<Formula> fs;
  for (int i = 0; i < 512; ++i) fs.push_back(gen.sentence());
  for (auto _ : state) {
    state.PauseTiming();
    TruthTower tower(DomainSpec::rank_cap(4), 6);
    state.ResumeTiming();
    for (const auto& f : fs) benchmark::DoNotOptimize(tower.member(f));
  }
  state.SetItemsProcessed(state.iterations() * 512);
}
BENCHMARK(BM_TowerQueryCold);

static void BM_TowerQueryMemoized(benchmark::State& state) {
  TruthTower tower(DomainSpec::rank_cap(4), 6);
  FormulaGenOptions opt;
  opt.max_depth = 6;
  FormulaGen gen(opt, 0xDEAF);
  std::vector<Formula> fs;
  for (int i = 0; i < 512; ++i) fs.push_back(gen.sentence());
  for (const auto& f : fs) tower.member(f);  // warm
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tower.member(fs[i % fs.size()]));
    ++i;
  }
}
BENCHMARK(BM_TowerQueryMemoized);

static void BM_EnumerateBudget(benchmark::State& state) {
  FiniteStructure s = FiniteStructure::from_spec(DomainSpec::rank_cap(4));
  for (auto _ : state) {
    auto out = enumerate_sentences(s, state.range(0));
    benchmark::DoNotOptimize(out);
    state.SetItemsProcessed(out.size());
  }
}
BENCHMARK(BM_EnumerateBudget)->Arg(5)->Arg(7);

static void BM_Piecewise(benchmark::State& state) {
  TruthTower tower(DomainSpec::rank_cap(4), 6);
  for (auto _ : state) benchmark::DoNotOptimize(piecewise_code(tower, Nat(state.range(0))));
}
BENCHMARK(BM_Piecewise)->Arg(1 << 10)->Arg(1 << 14);
