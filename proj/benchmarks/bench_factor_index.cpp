#include <benchmark/benchmark.h>

#include "wordsym/factor_index.hpp"
#include "wordsym/generators.hpp"

using namespace wordsym;

static void BM_BuildIndex(benchmark::State& state) {
    Word prefix = WordSpec::thue_morse().prefix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        FactorIndex idx = FactorIndex::build(prefix, 16);
        benchmark::DoNotOptimize(idx.complexity(16));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildIndex)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

static void BM_Stabilize(benchmark::State& state) {
    WordSpec spec = WordSpec::thue_morse();
    const int n_max = static_cast<int>(state.range(0));
    for (auto _ : state) {
        FactorIndex idx = stabilize(spec, n_max);
        benchmark::DoNotOptimize(idx.trust().prefix_length);
    }
}
BENCHMARK(BM_Stabilize)->Arg(16)->Arg(32)->Arg(65)->Arg(114);

static void BM_CompleteReturnWords(benchmark::State& state) {
    FactorIndex idx = stabilize(WordSpec::thue_morse(), 16);
    Word w = word_from_digits("0110");
    for (auto _ : state) {
        benchmark::DoNotOptimize(complete_return_words(idx, w));
    }
}
BENCHMARK(BM_CompleteReturnWords);
