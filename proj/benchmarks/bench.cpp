#include <benchmark/benchmark.h>

#include <random>

#include "blg/canonical.hpp"
#include "blg/enumerate.hpp"
#include "blg/fourcolor.hpp"
#include "blg/hommatrix.hpp"
#include "blg/intertwine.hpp"
#include "blg/planarity.hpp"

namespace {

blg::Graph random_graph(unsigned seed, int n, double p) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution edge(p);
    blg::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

blg::Graph cycle(int n) {
    blg::Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

void bm_hom_count_brute(benchmark::State& state) {
    blg::Graph k = cycle(static_cast<int>(state.range(0)));
    blg::Graph g = cayley_s4(blg::CayleyWhich::H);
    for (auto _ : state) benchmark::DoNotOptimize(blg::hom_count(k, g));
}
BENCHMARK(bm_hom_count_brute)->Arg(4)->Arg(5);

void bm_hom_count_dp(benchmark::State& state) {
    blg::Graph k = cycle(static_cast<int>(state.range(0)));
    blg::Graph g = cayley_s4(blg::CayleyWhich::H);
    for (auto _ : state) benchmark::DoNotOptimize(blg::hom_count_dp(k, g));
}
BENCHMARK(bm_hom_count_dp)->Arg(4)->Arg(5)->Arg(6);

void bm_planarity(benchmark::State& state) {
    blg::Graph g = random_graph(42, static_cast<int>(state.range(0)), 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(blg::is_planar(g));
}
BENCHMARK(bm_planarity)->Arg(16)->Arg(32)->Arg(64);

void bm_canonical_form(benchmark::State& state) {
    blg::Graph g = random_graph(7, static_cast<int>(state.range(0)), 0.4);
    for (auto _ : state) benchmark::DoNotOptimize(blg::canonical_form(g).certificate);
}
BENCHMARK(bm_canonical_form)->Arg(8)->Arg(12)->Arg(16);

void bm_enumerate_classes(benchmark::State& state) {
    for (auto _ : state) {
        blg::EnumerateOptions opts;
        benchmark::DoNotOptimize(blg::enumerate_graphs(static_cast<int>(state.range(0)), opts));
    }
}
BENCHMARK(bm_enumerate_classes)->Arg(5)->Arg(6);

void bm_wl2(benchmark::State& state) {
    blg::Graph g = random_graph(13, static_cast<int>(state.range(0)), 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(blg::wl2(g).classes.size());
}
BENCHMARK(bm_wl2)->Arg(12)->Arg(24)->Arg(48);

void bm_coloring(benchmark::State& state) {
    blg::Graph h = cayley_s4(blg::CayleyWhich::H);
    for (auto _ : state) benchmark::DoNotOptimize(blg::colorability(h, 4).has_value());
}
BENCHMARK(bm_coloring);

}  // namespace

BENCHMARK_MAIN();
