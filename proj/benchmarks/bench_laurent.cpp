#include <benchmark/benchmark.h>

#include "support.hpp"
#include "vbcm/laurent.hpp"

using namespace vbcm;

static void BM_Diagonalize(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  testsupport::Rng rng(7);
  std::vector<laurent::LaurentMatrix> mats;
  for (int i = 0; i < 16; ++i)
    mats.push_back(testsupport::random_invertible_laurent(rng, Field::rationals(), n, 3, 8));
  std::size_t k = 0;
  for (auto _ : state) {
    auto res = laurent::diagonalize(mats[k++ % mats.size()]);
    benchmark::DoNotOptimize(res.degrees);
  }
}
BENCHMARK(BM_Diagonalize)->Arg(2)->Arg(3)->Arg(4);

static void BM_SectionOracle(benchmark::State& state) {
  testsupport::Rng rng(8);
  auto a = testsupport::random_invertible_laurent(rng, Field::rationals(), 3, 3, 8);
  for (auto _ : state) {
    benchmark::DoNotOptimize(laurent::section_dim_oracle(a, state.range(0)));
  }
}
BENCHMARK(BM_SectionOracle)->Arg(0)->Arg(3);

BENCHMARK_MAIN();
