#include <benchmark/benchmark.h>

#include "diachrome/discordant.hpp"
#include "diachrome/families.hpp"
#include "diachrome/solver.hpp"

using namespace diachrome;

static void BM_DacTransitive(benchmark::State& state) {
    Digraph t = transitive_tournament(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(diachromatic_number(t).value);
    }
}
BENCHMARK(BM_DacTransitive)->Arg(6)->Arg(8)->Arg(10);

static void BM_DacRandomTournament(benchmark::State& state) {
    Digraph t = random_tournament(static_cast<int>(state.range(0)), 17);
    for (auto _ : state) {
        benchmark::DoNotOptimize(diachromatic_number(t).value);
    }
}
BENCHMARK(BM_DacRandomTournament)->Arg(7)->Arg(9)->Arg(11);

static void BM_PsiRandomDigraph(benchmark::State& state) {
    Digraph d = random_digraph(static_cast<int>(state.range(0)), 0.35, 23);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pseudoachromatic_number(d).value);
    }
}
BENCHMARK(BM_PsiRandomDigraph)->Arg(7)->Arg(9);

static void BM_DiscordantExtraction(benchmark::State& state) {
    Digraph t = random_tournament(static_cast<int>(state.range(0)), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(discordant_subtournament(t).vertices.size());
    }
}
BENCHMARK(BM_DiscordantExtraction)->Arg(50)->Arg(100)->Arg(200);

static void BM_DiscordantPartition(benchmark::State& state) {
    Digraph t = random_tournament(static_cast<int>(state.range(0)), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(discordant_partition_coloring(t).coloring.color_count());
    }
}
BENCHMARK(BM_DiscordantPartition)->Arg(50)->Arg(200);

static void BM_StrongComponents(benchmark::State& state) {
    Digraph d = random_digraph(static_cast<int>(state.range(0)), 0.05, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(d.strong_components().size());
    }
}
BENCHMARK(BM_StrongComponents)->Arg(100)->Arg(200);

BENCHMARK_MAIN();
