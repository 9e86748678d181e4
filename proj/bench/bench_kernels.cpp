#include "critset/generators.hpp"
#include "critset/params.hpp"

#include <benchmark/benchmark.h>

using namespace critset;

namespace {

SolveOptions with(Exec e) {
    SolveOptions o;
    o.exec = e;
    return o;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_sn_rook33_k6(benchmark::State& state) {
    const auto g = generate({"rook", {3, 3}});
    for (auto _ : state)
        benchmark::DoNotOptimize(sn(g, 6, with(exec_of(state))).value);
    label(state);
}

void BM_sn_gk6(benchmark::State& state) {
    const auto g = generate({"kkk_minus_matching", {6}});
    for (auto _ : state)
        benchmark::DoNotOptimize(sn(g, 5, with(exec_of(state))).value);
    label(state);
}

void BM_sn_sud2(benchmark::State& state) {
    const auto g = generate({"sudoku_hypergraph", {2}});
    for (auto _ : state)
        benchmark::DoNotOptimize(sn(g, 2, with(exec_of(state))).value);
    label(state);
}

void BM_ulcs_fig3(benchmark::State& state) {
    const auto g = generate({"fig3_graph", {4}});
    for (auto _ : state)
        benchmark::DoNotOptimize(ulcs(g, 4, with(exec_of(state))).value);
    label(state);
}

void BM_olcs_latin4(benchmark::State& state) {
    const auto g = generate({"latin_hypergraph", {4}});
    for (auto _ : state)
        benchmark::DoNotOptimize(olcs(g, 2, with(exec_of(state))).value);
    label(state);
}

void BM_oscs_petersen(benchmark::State& state) {
    const auto g = generate({"petersen", {}});
    for (auto _ : state)
        benchmark::DoNotOptimize(oscs(g, 3, with(exec_of(state))).value);
    label(state);
}

}  // namespace

BENCHMARK(BM_sn_rook33_k6)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sn_gk6)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sn_sud2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_ulcs_fig3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_olcs_latin4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_oscs_petersen)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
