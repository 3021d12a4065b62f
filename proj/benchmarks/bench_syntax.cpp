#include <benchmark/benchmark.h>

#include "hflab/gen.hpp"
#include "hflab/godel.hpp"

using namespace hflab;

namespace {

std::vector<Formula> corpus() {
  FormulaGenOptions opt;
  opt.max_depth = 6;
  FormulaGen gen(opt, 0xBE9C);
  std::vector<Formula> out;
  for (int i = 0; i < 256; ++i) out.push_back(gen.sentence());
  return out;
}

}  // namespace

static void BM_ParsePrint(benchmark::State& state) {
  auto fs = corpus();
  std::vector<std::string> texts;
  for (const auto& f : fs) texts.push_back(print_formula(f));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(parse_formula(texts[i % texts.size()], Sig::Set));
    ++i;
  }
}
BENCHMARK(BM_ParsePrint);

static void BM_GodelCode(benchmark::State& state) {
  auto fs = corpus();
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(godel_code(fs[i % fs.size()]));
    ++i;
  }
}
BENCHMARK(BM_GodelCode);

static void BM_GodelRoundTrip(benchmark::State& state) {
  auto fs = corpus();
  std::vector<Nat> codes;
  for (const auto& f : fs) codes.push_back(godel_code(f));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(godel_decode(codes[i % codes.size()]));
    ++i;
  }
}
BENCHMARK(BM_GodelRoundTrip);

static void BM_Substitute(benchmark::State& state) {
  FormulaGenOptions opt;
  opt.max_depth = 6;
  FormulaGen gen(opt, 0x5B5B5B);
  std::vector<Formula> open;
  while (open.size() < 64) {
    Formula f = gen.open_formula(1);
    if (f.free_vars().size() == 1) open.push_back(f);
  }
  Term c7 = Term::constant(Nat(7));
  size_t i = 0;
  for (auto _ : state) {
    const Formula& f = open[i % open.size()];
    benchmark::DoNotOptimize(substitute(f, f.free_vars()[0], c7));
    ++i;
  }
}
BENCHMARK(BM_Substitute);
