#include <benchmark/benchmark.h>

#include "wkb/classical_cech.hpp"

using namespace wkb;

static void BM_h1_central_q8_circle(benchmark::State& state) {
    CrossedModule cm = cm_fixture("central:Q8");
    Nerve nv = nerve_fixture("circle");
    for (auto _ : state) benchmark::DoNotOptimize(h1(cm, nv));
}
BENCHMARK(BM_h1_central_q8_circle);

static void BM_h1_g1_z2_sphere(benchmark::State& state) {
    CrossedModule cm = cm_fixture("g1:Z2");
    Nerve nv = nerve_fixture("sphere");
    for (auto _ : state) benchmark::DoNotOptimize(h1(cm, nv));
}
BENCHMARK(BM_h1_g1_z2_sphere);

static void BM_classical_h2_sphere_z3(benchmark::State& state) {
    FiniteGroup g = group_fixture("Z3");
    Nerve nv = nerve_fixture("sphere");
    for (auto _ : state) benchmark::DoNotOptimize(classical_cohomology(g, nv, 2));
}
BENCHMARK(BM_classical_h2_sphere_z3);

static void BM_bridge_v4_sphere(benchmark::State& state) {
    FiniteGroup g = group_fixture("V4");
    Nerve nv = nerve_fixture("sphere");
    for (auto _ : state) benchmark::DoNotOptimize(bridge_verify(g, nv));
}
BENCHMARK(BM_bridge_v4_sphere);

static void BM_compare_hyper_z2_circle(benchmark::State& state) {
    FiniteGroup g = group_fixture("Z2");
    Nerve nv = nerve_fixture("circle");
    for (auto _ : state) benchmark::DoNotOptimize(compare_hyper(g, nv));
}
BENCHMARK(BM_compare_hyper_z2_circle);

BENCHMARK_MAIN();
