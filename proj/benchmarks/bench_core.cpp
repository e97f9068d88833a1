#include <benchmark/benchmark.h>

#include "abelatt/eutaxy.hpp"
#include "abelatt/group.hpp"
#include "abelatt/lattice.hpp"
#include "abelatt/min_basis.hpp"

using namespace abelatt;

namespace {

void BM_MinimalVectors(benchmark::State& state) {
  const AbelianGroup A(std::vector<int>{static_cast<int>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimal_vectors(A));
  }
}
BENCHMARK(BM_MinimalVectors)->Arg(8)->Arg(12)->Arg(16);

void BM_ShortVectorOracle(benchmark::State& state) {
  const AbelianGroup A(std::vector<int>{static_cast<int>(state.range(0))});
  const LatticeDescription L = canonical_basis(A, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(short_vector_oracle(L, Int(4)));
  }
}
BENCHMARK(BM_ShortVectorOracle)->Arg(8)->Arg(12)->Arg(16);

void BM_OmegaSum(benchmark::State& state) {
  const AbelianGroup A(std::vector<int>{static_cast<int>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sum_mm_star(A));
  }
}
BENCHMARK(BM_OmegaSum)->Arg(8)->Arg(16);

void BM_BuildAndVerifyCertificate(benchmark::State& state) {
  const AbelianGroup A(std::vector<int>{static_cast<int>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_certificate(A));
  }
}
BENCHMARK(BM_BuildAndVerifyCertificate)->Arg(6)->Arg(12)->Arg(16);

void BM_PerfectionRank(benchmark::State& state) {
  const AbelianGroup A(std::vector<int>{static_cast<int>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(perfection_rank(A));
  }
}
BENCHMARK(BM_PerfectionRank)->Arg(8)->Arg(12)->Arg(16);

void BM_GeneralMinBasis(benchmark::State& state) {
  const AbelianGroup A(std::vector<int>{static_cast<int>(state.range(0))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(general_min_basis(A));
  }
}
BENCHMARK(BM_GeneralMinBasis)->Arg(8)->Arg(16);

void BM_CraigMinimum(benchmark::State& state) {
  const AbelianGroup A(std::vector<int>{7});
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_distance(A, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_CraigMinimum)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
