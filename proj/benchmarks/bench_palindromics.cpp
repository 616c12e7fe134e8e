#include <benchmark/benchmark.h>

#include "wordsym/generators.hpp"
#include "wordsym/pal_tree.hpp"
#include "wordsym/palindromics.hpp"
#include "wordsym/symmetry.hpp"

using namespace wordsym;

// Throughput of the incremental Θ-palindromic suffix tree.
static void BM_PalTreePush(benchmark::State& state) {
    Word prefix = WordSpec::thue_morse().prefix(static_cast<std::size_t>(state.range(0)));
    Symmetry tr = reversal(2);
    for (auto _ : state) {
        PalTree tree(tr);
        for (char c : prefix) tree.push(static_cast<unsigned char>(c));
        benchmark::DoNotOptimize(tree.defect());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PalTreePush)->RangeMultiplier(4)->Range(1 << 10, 1 << 20);

static void BM_WordDefect(benchmark::State& state) {
    WordSpec spec = WordSpec::fibonacci();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            word_defect(spec, reversal(2), static_cast<std::size_t>(state.range(0))));
    }
}
BENCHMARK(BM_WordDefect)->Arg(100000);

static void BM_PalComplexity(benchmark::State& state) {
    FactorIndex idx = stabilize(WordSpec::thue_morse(), 65);
    Symmetry tr = reversal(2);
    for (auto _ : state) {
        long long total = 0;
        for (int n = 1; n <= 64; ++n) total += pal_complexity(idx, tr, n);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_PalComplexity);
