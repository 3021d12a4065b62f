#include <benchmark/benchmark.h>

#include "hflab/bridge.hpp"
#include "hflab/hf.hpp"

using namespace hflab;

static void BM_AckDecode(benchmark::State& state) {
  unsigned long n = 0;
  for (auto _ : state) {
    HFSet s = ack_decode(Nat(n % 65536));
    benchmark::DoNotOptimize(s);
    n += 37;
  }
}
BENCHMARK(BM_AckDecode);

static void BM_AckRoundTrip(benchmark::State& state) {
  for (auto _ : state) {
    for (unsigned long n = 0; n < static_cast<unsigned long>(state.range(0)); ++n)
      benchmark::DoNotOptimize(ack_encode(ack_decode(Nat(n))));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_AckRoundTrip)->Arg(1 << 8)->Arg(1 << 12);

static void BM_AckMem(benchmark::State& state) {
  Nat big = nat_pow2(4000) + 12345;
  unsigned long x = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ack_mem(Nat(x % 4096), big));
    ++x;
  }
}
BENCHMARK(BM_AckMem);

static void BM_TransitiveClosure(benchmark::State& state) {
  for (auto _ : state) {
    for (unsigned long n = 0; n < 256; ++n)
      benchmark::DoNotOptimize(transitive_closure(ack_decode(Nat(n * 17 % 65536))));
  }
  state.SetItemsProcessed(state.iterations() * 256);
}
BENCHMARK(BM_TransitiveClosure);

static void BM_OrdinalSet(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ordinal_set(state.range(0)));
}
BENCHMARK(BM_OrdinalSet)->Arg(8)->Arg(16);
