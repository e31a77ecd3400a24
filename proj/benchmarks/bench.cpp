#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "cep/bounds.hpp"
#include "cep/exact1d.hpp"
#include "cep/montecarlo.hpp"
#include "cep/presets.hpp"

namespace {

cep::Bundle ring() { return cep::presets::ring_4_12(0.22); }

void BM_q_function(benchmark::State& state) {
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cep::q_function(x));
        x += 1e-6;
    }
}
BENCHMARK(BM_q_function);

void BM_decide(benchmark::State& state) {
    const cep::Bundle b = ring();
    const cep::Decider decider(b, cep::DetectorKind::map, cep::NoiseModel(0.3));
    std::vector<double> y{0.4, -1.1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(decider(y));
        y[0] = -y[0];
    }
}
BENCHMARK(BM_decide);

void BM_error_ub(benchmark::State& state) {
    const cep::Bundle b = ring();
    const cep::NoiseModel noise(0.2);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            cep::error_ub(b, {cep::DetectorKind::map, cep::ErrorKind::sep}, noise));
}
BENCHMARK(BM_error_ub);

void BM_error_lb(benchmark::State& state) {
    const cep::Bundle b = ring();
    const cep::NoiseModel noise(0.1);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            cep::error_lb(b, {cep::DetectorKind::map, cep::ErrorKind::sep}, noise));
}
BENCHMARK(BM_error_lb);

void BM_sep_exact(benchmark::State& state) {
    const cep::Bundle b = cep::presets::uniform_pam(8);
    const cep::NoiseModel noise(0.4);
    for (auto _ : state)
        benchmark::DoNotOptimize(cep::sep_exact(b, cep::DetectorKind::map, noise));
}
BENCHMARK(BM_sep_exact);

void BM_simulate(benchmark::State& state) {
    const cep::Bundle b = ring();
    const cep::NoiseModel noise(0.25);
    cep::SimConfig config{.trials = static_cast<std::uint64_t>(state.range(0)),
                          .seed = 1,
                          .detector = cep::DetectorKind::map,
                          .error = cep::ErrorKind::sep,
                          .workers = 1};
    for (auto _ : state) benchmark::DoNotOptimize(cep::simulate(b, noise, config));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_simulate)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
