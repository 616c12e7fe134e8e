#include <benchmark/benchmark.h>

#include "wordsym/generators.hpp"
#include "wordsym/repetitions.hpp"
#include "wordsym/symmetry.hpp"

using namespace wordsym;

// Worst case: the Thue-Morse word has no overlap, so every period is scanned.
static void BM_FindOverlapsTM(benchmark::State& state) {
    Word prefix = WordSpec::thue_morse().prefix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_overlaps(prefix, 10));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindOverlapsTM)->RangeMultiplier(2)->Range(1 << 10, 1 << 15)->Complexity();

static void BM_FindSquaresFib(benchmark::State& state) {
    Word prefix = WordSpec::fibonacci().prefix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_squares(prefix, 50));
    }
}
BENCHMARK(BM_FindSquaresFib)->Arg(1 << 12);

static void BM_SearchSquarefreeRich(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    Symmetry tr = reversal(k);
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_squarefree_rich(k, tr, 1 << 30));
    }
}
BENCHMARK(BM_SearchSquarefreeRich)->DenseRange(3, 6);
