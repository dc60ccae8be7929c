#include <benchmark/benchmark.h>

#include "coreblocks/cores.hpp"
#include "coreblocks/partition.hpp"
#include "coreblocks/symchars.hpp"

namespace {

void bm_character_table(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        coreblocks::CharTable t = coreblocks::character_table(n);
        benchmark::DoNotOptimize(t.values);
    }
}
BENCHMARK(bm_character_table)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void bm_d_core(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto parts = coreblocks::enumerate_partitions(n);
    for (auto _ : state) {
        for (const auto& lambda : parts) {
            auto cq = coreblocks::d_core(lambda, 5);
            benchmark::DoNotOptimize(cq.weight);
        }
    }
}
BENCHMARK(bm_d_core)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void bm_core_count_series(benchmark::State& state) {
    const int nmax = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto s = coreblocks::count_cores_genfun(7, nmax);
        benchmark::DoNotOptimize(s.counts.back());
    }
}
BENCHMARK(bm_core_count_series)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
