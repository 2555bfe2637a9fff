#include <benchmark/benchmark.h>

#include <vector>

#include "bient/entanglement.hpp"
#include "bient/sampling.hpp"
#include "bient/su_bases.hpp"

namespace {

std::vector<bient::PureState> states(std::size_t n) {
    std::vector<bient::PureState> out;
    bient::RandomStream s(1);
    for (std::size_t i = 0; i < n; ++i) out.push_back(bient::haar_random(3, s));
    return out;
}

const std::vector<bient::PureState>& pool() {
    static const auto p = states(1024);
    return p;
}

template <typename F>
void over_pool(benchmark::State& state, F&& f) {
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f(pool()[i++ & 1023]));
    }
    state.SetItemsProcessed(state.iterations());
}

} // namespace

static void ConcurrenceAmplitudes(benchmark::State& state) {
    over_pool(state, [](const bient::PureState& p) { return bient::concurrence_amplitudes(p); });
}
BENCHMARK(ConcurrenceAmplitudes);

static void ConcurrenceBloch(benchmark::State& state) {
    over_pool(state, [](const bient::PureState& p) { return bient::concurrence_bloch(p); });
}
BENCHMARK(ConcurrenceBloch);

static void SchmidtDecompose(benchmark::State& state) {
    over_pool(state, [](const bient::PureState& p) { return bient::schmidt_decompose(p).k2; });
}
BENCHMARK(SchmidtDecompose);

static void EntropyQutritMarginal(benchmark::State& state) {
    over_pool(state, [](const bient::PureState& p) { return bient::von_neumann_entropy(bient::reduced_b(p.density())); });
}
BENCHMARK(EntropyQutritMarginal);

static void FullReport(benchmark::State& state) {
    over_pool(state, [](const bient::PureState& p) { return bient::full_report(p).eof; });
}
BENCHMARK(FullReport);

static void HaarSample(benchmark::State& state) {
    bient::RandomStream s(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(bient::haar_random(3, s));
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(HaarSample);

BENCHMARK_MAIN();
