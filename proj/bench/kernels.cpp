// Serial reference vs OpenMP kernels on fixed random inputs. The inputs for
// the redundancy and 3-connectivity scans are dense enough that neither scan
// can stop early.
#include <benchmark/benchmark.h>

#include <random>

#include "pgr/blocks.hpp"
#include "pgr/bruteforce.hpp"
#include "pgr/oracle.hpp"
#include "pgr/sparsity.hpp"

using namespace pgr;

namespace {

GainGraph dense_graph(int k, int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GainGraph g(k, n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<std::int64_t> gain(-2, 2);
    while (g.num_edges() < m) {
        const VertexId u = pick(rng), w = pick(rng);
        if (u == w) continue;
        GainVec gv(k);
        for (int i = 0; i < k; ++i) gv[i] = gain(rng);
        if (!g.find_edge(u, w, gv)) g.add_edge(u, w, gv);
    }
    return g;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void BM_RedundantRigidity(benchmark::State& state) {
    const GainGraph g = dense_graph(2, 20, 120, 1);
    for (auto _ : state) benchmark::DoNotOptimize(is_redundantly_rigid(g, exec_of(state)));
}
BENCHMARK(BM_RedundantRigidity)->Arg(0)->Arg(1)->ArgName("parallel");

void BM_ThreeConnectivity(benchmark::State& state) {
    const GainGraph g = dense_graph(0, 30, 200, 2);
    for (auto _ : state) benchmark::DoNotOptimize(is_three_connected(g, exec_of(state)));
}
BENCHMARK(BM_ThreeConnectivity)->Arg(0)->Arg(1)->ArgName("parallel");

void BM_ZeroTwoBlockSearch(benchmark::State& state) {
    const GainGraph g = dense_graph(1, 50, 110, 3);
    for (auto _ : state) benchmark::DoNotOptimize(find_zero_two_block(g, exec_of(state)));
}
BENCHMARK(BM_ZeroTwoBlockSearch)->Arg(0)->Arg(1)->ArgName("parallel");

void BM_FieldRank(benchmark::State& state) {
    const GainGraph g = dense_graph(2, 60, 150, 4);
    const FieldConfig cfg{kDefaultPrime, 7, 8};
    for (auto _ : state) benchmark::DoNotOptimize(generic_rank_mod_p(g, Lattice::standard(2), cfg, exec_of(state)));
}
BENCHMARK(BM_FieldRank)->Arg(0)->Arg(1)->ArgName("parallel");

void BM_BruteForceIndependence(benchmark::State& state) {
    const GainGraph g = dense_graph(2, 10, 18, 5);
    const EdgeSet all = EdgeSet::all(g);
    for (auto _ : state) benchmark::DoNotOptimize(bf::is_independent(g, all, exec_of(state)));
}
BENCHMARK(BM_BruteForceIndependence)->Arg(0)->Arg(1)->ArgName("parallel");

}  // namespace

BENCHMARK_MAIN();
