// OpenMP enumerator against the serial reference on section polytopes of
// h·H' on L_{n-2} (C(h+n-3, n-3) lattice points).

#include <benchmark/benchmark.h>

#include "m0n/permutohedral.hpp"
#include "m0n/polytope.hpp"

using namespace m0n;

namespace {

HalfspaceSystem scaled_hyperplane(int n, int h) {
  const LabeledFan fan = build_losev_manin(n);
  return section_polytope(fan, divisor_from_class(fan, h * KapranovClassL::hyperplane(n)));
}

template <std::vector<IntVector> (*Enumerate)(const HalfspaceSystem &)>
void run(benchmark::State &state) {
  const HalfspaceSystem system = scaled_hyperplane(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::size_t points = 0;
  for (auto _ : state) {
    auto pts = Enumerate(system);
    points = pts.size();
    benchmark::DoNotOptimize(pts);
  }
  state.counters["points"] = static_cast<double>(points);
}

void args(benchmark::internal::Benchmark *b) {
  b->Args({6, 6})->Args({6, 12})->Args({7, 4})->Args({7, 8})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(run<integer_points_serial>)->Name("serial")->Apply(args);
BENCHMARK(run<integer_points>)->Name("openmp")->Apply(args);

BENCHMARK_MAIN();
