#include <benchmark/benchmark.h>

#include "support.hpp"
#include "vbcm/cmmod.hpp"
#include "vbcm/cohom.hpp"

using namespace vbcm;

static void BM_CohomologyFormula(benchmark::State& state) {
  testsupport::Rng rng(27);
  std::vector<band::BandDatum> data;
  for (int i = 0; i < 64; ++i)
    data.push_back(testsupport::random_band(rng, Field::rationals(), 12, -5, 5, 4));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cohom::cohomology(data[k++ % data.size()]));
  }
}
BENCHMARK(BM_CohomologyFormula);

static void BM_CechOracle(benchmark::State& state) {
  testsupport::Rng rng(28);
  std::vector<band::BandDatum> data;
  for (int i = 0; i < 16; ++i)
    data.push_back(testsupport::random_band(rng, Field::fp(7), static_cast<int>(state.range(0)),
                                            -2, 2, 2));
  std::size_t k = 0;
  for (auto _ : state) {
    const auto& b = data[k++ % data.size()];
    benchmark::DoNotOptimize(cohom::cech_oracle(band::build_gluing(b), b.d));
  }
}
BENCHMARK(BM_CechOracle)->Arg(4)->Arg(8);

static void BM_CuspEnumeration(benchmark::State& state) {
  cmmod::CuspSingularity sing{2, {2, 3}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(cmmod::enumerate_cm_cusp(sing, state.range(0)));
  }
}
BENCHMARK(BM_CuspEnumeration)->Arg(2)->Arg(4);

static void BM_BandEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        band::enumerate_nonneg(1, static_cast<int>(state.range(0)), {state.range(0)}));
  }
}
BENCHMARK(BM_BandEnumeration)->Arg(6)->Arg(8);
