#include <benchmark/benchmark.h>

#include "spinlocal/admissible.hpp"
#include "spinlocal/hecke.hpp"
#include "spinlocal/lhs.hpp"
#include "spinlocal/rhs.hpp"
#include "spinlocal/symbols.hpp"

using namespace spinlocal;

static void BM_MainIdentity(benchmark::State& state) {
  EtaleQuadratic L(3, state.range(0), 20);
  for (auto _ : state) benchmark::DoNotOptimize(verify_main_identity(L, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_MainIdentity)->Args({5, 2})->Args({5, 4})->Args({13, 4})->Unit(benchmark::kMillisecond);

static void BM_LhsSeries(benchmark::State& state) {
  EtaleQuadratic L(3, state.range(0), 20);
  for (auto _ : state) benchmark::DoNotOptimize(lhs_series(L, 3));
}
BENCHMARK(BM_LhsSeries)->Arg(5)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_AdmissibleLattice(benchmark::State& state) {
  const unsigned p = static_cast<unsigned>(state.range(0));
  auto ms = enumerate_M(p, 2, 2, 2);
  for (auto _ : state)
    for (const auto& m : ms) benchmark::DoNotOptimize(admissible_lattice(m, p, 5));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(ms.size()));
}
BENCHMARK(BM_AdmissibleLattice)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_Gsp6Cosets(benchmark::State& state) {
  const HeckeOp op = state.range(0) == 0 ? HeckeOp::T03 : HeckeOp::T23;
  for (auto _ : state) benchmark::DoNotOptimize(gsp6_coset_reps(3, op));
}
BENCHMARK(BM_Gsp6Cosets)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Canonicalize(benchmark::State& state) {
  EtaleQuadratic L(3, 13, 20);
  auto g = iota_class(L, 3, {1, 1});
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(g, 13));
}
BENCHMARK(BM_Canonicalize);

BENCHMARK_MAIN();
