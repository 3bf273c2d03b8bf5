#include "parahoric/cohomology.hpp"
#include "parahoric/kernels.hpp"
#include "parahoric/rootdata.hpp"

#include <benchmark/benchmark.h>

using namespace parahoric;
using namespace parahoric::kernels;

namespace {

constexpr std::size_t kCap = std::size_t{1} << 26;

Policy policy_of(const benchmark::State& state) { return state.range(0) == 0 ? Policy::Serial : Policy::Parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

// Reflections of F4 acting on T[L], the generators used by orbit enumeration.
std::vector<AffineMap> f4_maps(std::int64_t L) {
  const RootDatum d = build_root_datum("F4");
  std::vector<AffineMap> maps;
  for (std::size_t i = 1; i <= d.rank; ++i)
    maps.push_back({to_residue_matrix(simple_reflection(d, i).matrix, L), std::vector<std::int64_t>(d.rank, 1 % L)});
  return maps;
}

void BM_EnumerateKernel(benchmark::State& state) {
  const std::int64_t L = state.range(1);
  const IntMatrix n = norm_matrix(simple_reflection(build_root_datum("B4"), 1).matrix, 2);
  const ResidueMatrix c = to_residue_matrix(n, L);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_kernel(c, 4, kCap, policy_of(state)).size());
  label(state);
}

void BM_OrbitLabels(benchmark::State& state) {
  const std::int64_t L = state.range(1);
  const PointTable all = enumerate_kernel(ResidueMatrix{0, 4, L, {}}, 4, kCap, Policy::Parallel);
  const auto maps = f4_maps(L);
  for (auto _ : state) benchmark::DoNotOptimize(orbit_labels(all, maps, policy_of(state)).size());
  label(state);
}

void BM_BurnsideTotal(benchmark::State& state) {
  const std::int64_t L = state.range(1);
  std::vector<AffineMap> maps;
  for (const auto& w : weyl_group_elements(build_root_datum("B4")))
    maps.push_back({to_residue_matrix(w.matrix, L), std::vector<std::int64_t>(4, 0)});
  for (auto _ : state) benchmark::DoNotOptimize(burnside_total(maps, kCap, policy_of(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_EnumerateKernel)->ArgsProduct({{0, 1}, {16, 32}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitLabels)->ArgsProduct({{0, 1}, {8, 12}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BurnsideTotal)->ArgsProduct({{0, 1}, {4, 6}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
