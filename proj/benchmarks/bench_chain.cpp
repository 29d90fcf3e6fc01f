#include <benchmark/benchmark.h>

#include "support.hpp"
#include "vbcm/chain.hpp"

using namespace vbcm;

static void BM_ReduceChain(benchmark::State& state) {
  int s = static_cast<int>(state.range(0));
  int r = static_cast<int>(state.range(1));
  testsupport::Rng rng(17);
  std::vector<chain::ChainData> data;
  for (int i = 0; i < 16; ++i)
    data.push_back(testsupport::random_vb_chain(rng, Field::fp(101), s, r));
  std::size_t k = 0;
  for (auto _ : state) {
    auto res = chain::reduce_chain(data[k++ % data.size()]);
    benchmark::DoNotOptimize(res.bundles);
  }
}
BENCHMARK(BM_ReduceChain)->Args({3, 3})->Args({4, 4})->Args({6, 5});

static void BM_TorsionFree(benchmark::State& state) {
  testsupport::Rng rng(18);
  std::vector<chain::ChainData> data;
  for (int i = 0; i < 16; ++i)
    data.push_back(testsupport::random_tf_chain(rng, Field::fp(101), static_cast<int>(state.range(0))));
  std::size_t k = 0;
  for (auto _ : state) {
    auto res = chain::decompose_torsion_free(data[k++ % data.size()]);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_TorsionFree)->Arg(3)->Arg(5);
