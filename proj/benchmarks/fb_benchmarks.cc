#include <benchmark/benchmark.h>

#include "fb/burnside_ring.h"
#include "fb/constructors.h"
#include "fb/isomorphism.h"
#include "fb/lattice.h"
#include "fb/species.h"
#include "fb/thevenaz.h"

namespace {

const fb::ThevenazGroup& g39() {
  static const fb::ThevenazGroup g = fb::build_thevenaz({11, 5, 3, 9});
  return g;
}

void BM_BuildThevenaz(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fb::build_thevenaz({11, 5, 3, 9}));
}
BENCHMARK(BM_BuildThevenaz)->Unit(benchmark::kMillisecond);

void BM_EnumerateSubgroups605(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fb::enumerate_subgroups(g39().group, threads));
}
BENCHMARK(BM_EnumerateSubgroups605)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ClassTableS4xC2(benchmark::State& state) {
  const fb::FiniteGroup g = fb::direct_product(fb::symmetric_group(4), fb::cyclic_group(2));
  for (auto _ : state) benchmark::DoNotOptimize(fb::SubgroupClassTable(g));
}
BENCHMARK(BM_ClassTableS4xC2)->Unit(benchmark::kMillisecond);

void BM_BurnsideRing605(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fb::BurnsideRing(g39().group, fb::AbelianFiber({5})));
}
BENCHMARK(BM_BurnsideRing605)->Unit(benchmark::kMillisecond);

void BM_StructureConstants605(benchmark::State& state) {
  const fb::BurnsideRing ring(g39().group, fb::AbelianFiber({5}));
  for (auto _ : state) benchmark::DoNotOptimize(fb::structure_constants(ring));
}
BENCHMARK(BM_StructureConstants605)->Unit(benchmark::kMillisecond);

void BM_IsomorphismTest605(benchmark::State& state) {
  const fb::ThevenazGroup h = fb::build_thevenaz({11, 5, 9, 4});
  for (auto _ : state) benchmark::DoNotOptimize(fb::are_isomorphic(g39().group, h.group));
}
BENCHMARK(BM_IsomorphismTest605)->Unit(benchmark::kMillisecond);

void BM_SearchSpeciesS4(benchmark::State& state) {
  const fb::BurnsideRing ring(fb::symmetric_group(4), fb::AbelianFiber({6}));
  for (auto _ : state) benchmark::DoNotOptimize(fb::search_species(ring, ring));
}
BENCHMARK(BM_SearchSpeciesS4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
