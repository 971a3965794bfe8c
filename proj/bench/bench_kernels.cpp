// Serial reference against the OpenMP kernels on representative inputs.

#include <benchmark/benchmark.h>

#include "tors/kernels.hpp"
#include "tors/path_algebra.hpp"
#include "tors/poset.hpp"
#include "tors/resources.hpp"
#include "tors/silting.hpp"
#include "tors/spectrum.hpp"

using namespace tors;

namespace {

PathAlgebra builtin(const std::string& name) {
  return build_algebra(parse_algebra_text(require_resource("algebras/" + name + ".alg")));
}

const Poset& a3_tors() {
  static const Poset p = tors_lattice(builtin("a3"), 1000).poset;
  return p;
}

// Product of three 3-chains: 27 elements, 980 down-sets.
const Poset& grid() {
  static const Poset p = product({chain(3), chain(3), chain(3)}).poset;
  return p;
}

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void BM_RelationRows(benchmark::State& state) {
  const std::size_t n = 2048;
  for (auto _ : state) {
    auto rows = kernels::relation_rows(n, [](std::size_t i, std::size_t j) { return (i & j) == i; }, exec_of(state));
    benchmark::DoNotOptimize(rows);
  }
}

void BM_DownSets(benchmark::State& state) {
  Caps caps;
  caps.poset_elements = 100'000;
  for (auto _ : state) {
    auto d = down_sets(grid(), caps, exec_of(state));
    benchmark::DoNotOptimize(d);
  }
}

void BM_MonotoneMaps(benchmark::State& state) {
  const Poset x = chain(4);
  for (auto _ : state) {
    auto maps = state.range(0) ? monotone_maps_omp(x, a3_tors()) : monotone_maps_serial(x, a3_tors());
    benchmark::DoNotOptimize(maps);
  }
}

void BM_EnumerateCompatible(benchmark::State& state) {
  SpecModel m;
  m.spec = chain(3);
  m.fibers = {a3_tors(), a3_tors(), a3_tors()};
  for (auto _ : state) {
    auto t = state.range(0) ? enumerate_compatible_omp(m) : enumerate_compatible_serial(m);
    benchmark::DoNotOptimize(t);
  }
}

void BM_Enumerate2Silt(benchmark::State& state) {
  const PathAlgebra alg = builtin("a3");
  for (auto _ : state) {
    auto s = enumerate_2silt(alg, 1000, exec_of(state));
    benchmark::DoNotOptimize(s);
  }
}

}  // namespace

BENCHMARK(BM_RelationRows)->ArgName("omp")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DownSets)->ArgName("omp")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonotoneMaps)->ArgName("omp")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateCompatible)->ArgName("omp")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Enumerate2Silt)->ArgName("omp")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
