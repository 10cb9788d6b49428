#include <benchmark/benchmark.h>

#include "gwp/cumulants.hpp"
#include "gwp/fock.hpp"
#include "gwp/freeprob.hpp"
#include "gwp/nc_lattice.hpp"

using namespace gwp;

namespace {

Graph loops(std::size_t n) {
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({std::string(1, static_cast<char>('a' + i)), "v", "v"});
  return build_graph({"v"}, edges);
}

}  // namespace

// tr(T^n) for the N = 3 generating operator, symbolic and exact.
static void BM_SymbolicMoments(benchmark::State& state) {
  Graph g = loops(3);
  Element t = generating_operator(g, VertexId{0});
  for (auto _ : state) benchmark::DoNotOptimize(moments(t, static_cast<std::size_t>(state.range(0)), State::trace()));
}
BENCHMARK(BM_SymbolicMoments)->Arg(6)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

// Sparse matvec chain on the truncated Fock space, cutoff = n.
static void BM_FockMoment(benchmark::State& state) {
  Graph g = loops(3);
  Element t = generating_operator(g, VertexId{0});
  auto n = static_cast<unsigned>(state.range(0));
  FockRep rep = build_rep(g, n);
  for (auto _ : state) benchmark::DoNotOptimize(vacuum_moment(t, n, rep, VertexId{0}));
  state.counters["basis"] = static_cast<double>(rep.dimension());
}
BENCHMARK(BM_FockMoment)->Arg(6)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_BuildRep(benchmark::State& state) {
  Graph g = loops(3);
  for (auto _ : state) benchmark::DoNotOptimize(build_rep(g, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BuildRep)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_EnumerateNC(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_nc(n, [&](const NCPartition&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateNC)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

static void BM_Kreweras(benchmark::State& state) {
  auto all = enumerate_nc(10);
  for (auto _ : state)
    for (const auto& p : all) benchmark::DoNotOptimize(kreweras(p));
}
BENCHMARK(BM_Kreweras)->Unit(benchmark::kMillisecond);

static void BM_MomentsToCumulants(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Scalar> m;
  for (std::size_t i = 1; i <= n; ++i) m.emplace_back(static_cast<std::int64_t>(i));
  for (auto _ : state) benchmark::DoNotOptimize(moments_to_cumulants(m));
}
BENCHMARK(BM_MomentsToCumulants)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

// D_G-valued cumulant of n copies of L_a + L_a*.
static void BM_MixedCumulant(benchmark::State& state) {
  Graph g = loops(2);
  Element x = semicircular(g, g.edge("a"));
  std::vector<Element> f(static_cast<std::size_t>(state.range(0)), x);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_cumulant(f));
}
BENCHMARK(BM_MixedCumulant)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_FreenessScan(benchmark::State& state) {
  Graph g = loops(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(freeness_check(g, g.path({"a"}), g.path({"b"}), static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_FreenessScan)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
