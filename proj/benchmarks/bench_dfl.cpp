#include <benchmark/benchmark.h>

#include "dfl/commute.hpp"
#include "dfl/dilated.hpp"
#include "dfl/levelset.hpp"
#include "dfl/raster.hpp"
#include "dfl/sweep.hpp"

using dfl::Rat;

namespace {

void BM_rat_arithmetic(benchmark::State& state) {
    const Rat a(355, 113);
    const Rat b(-217, 391);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b + a / b - a);
    }
}
BENCHMARK(BM_rat_arithmetic);

void BM_eval_chain(benchmark::State& state) {
    const Rat chain[] = {Rat(5, 6), Rat(-7, 3), Rat(13, 11)};
    const Rat x(355, 113);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dfl::eval_chain(chain, x));
    }
}
BENCHMARK(BM_eval_chain);

void BM_upper_level_set(benchmark::State& state) {
    const Rat s(5, 6);
    const Rat t(-7, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dfl::upper_level_set(s, t, 7));
    }
}
BENCHMARK(BM_upper_level_set);

void BM_classify(benchmark::State& state) {
    const Rat s(5, 6);
    const Rat t(6, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dfl::classify(s, t));
    }
}
BENCHMARK(BM_classify);

void BM_find_witness(benchmark::State& state) {
    const Rat s(5, 6);
    const Rat t(6, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dfl::find_witness(s, t));
    }
}
BENCHMARK(BM_find_witness);

void BM_oracle_full_window(benchmark::State& state) {
    // commuting pair: the sweep cannot exit early
    const Rat s(1, 2);
    const Rat t(1, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            dfl::brute_force_commute(s, t, Rat(-10), Rat(10), 72));
    }
}
BENCHMARK(BM_oracle_full_window);

void BM_sweep_grid_3_3(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(dfl::run_sweep(3, 3, 1));
    }
}
BENCHMARK(BM_sweep_grid_3_3);

void BM_rasterize_4k(benchmark::State& state) {
    const Rat alpha(355, 113);
    const Rat gamma(-1, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dfl::rasterize(alpha, gamma, 0, 4095));
    }
}
BENCHMARK(BM_rasterize_4k);

}  // namespace

BENCHMARK_MAIN();
