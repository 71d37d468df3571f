// Serial reference drivers against their OpenMP counterparts.

#include "splitting/catalog.hpp"
#include "splitting/harness.hpp"
#include "splitting/search.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace splitting;

namespace {

SearchSpec third_order_spec() {
    SearchSpec spec;
    spec.target_order = 3;
    spec.units = 8;
    spec.a_max = 4;
    return spec;
}

void BM_SearchSerial(benchmark::State& state) {
    const SearchSpec spec = third_order_spec();
    for (auto _ : state) benchmark::DoNotOptimize(search_serial(spec).results.size());
}

void BM_SearchParallel(benchmark::State& state) {
    const SearchSpec spec = third_order_spec();
    for (auto _ : state) benchmark::DoNotOptimize(search(spec).results.size());
}

std::vector<double> sweep_steps() {
    std::vector<double> dts;
    for (int k = 0; k < 16; ++k) dts.push_back(0.02 / (1 << (k % 4)) * (1.0 + 0.01 * k));
    return dts;
}

void BM_SweepSerial(benchmark::State& state) {
    const OperatorSet ops = build_ising_nnn(4);
    const Method m = catalog_method("Z4_1");
    const auto dts = sweep_steps();
    for (auto _ : state) benchmark::DoNotOptimize(fixed_steps_sweep_serial(m, ops, dts, 200).size());
}

void BM_SweepParallel(benchmark::State& state) {
    const OperatorSet ops = build_ising_nnn(4);
    const Method m = catalog_method("Z4_1");
    const auto dts = sweep_steps();
    for (auto _ : state) benchmark::DoNotOptimize(fixed_steps_sweep(m, ops, dts, 200).size());
}

void BM_ApplyMethod(benchmark::State& state) {
    const OperatorSet ops = build_pauli_set();
    const Method m = catalog_method("Z4_1");
    for (auto _ : state) benchmark::DoNotOptimize(apply_method(m, ops, 0.01));
}

} // namespace

BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ApplyMethod)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
