#include <benchmark/benchmark.h>

#include "rexlab/automata.hpp"
#include "rexlab/gadget.hpp"
#include "rexlab/match.hpp"
#include "rexlab/random.hpp"

using namespace rexlab;

namespace {

GadgetConfig bench_config(std::size_t n, GadgetVariant v) {
    return make_config(n, 3, 4 * n, Rational(1, 5), v, 7);
}

void BM_BuildTarget(benchmark::State& state) {
    GadgetConfig c = bench_config(static_cast<std::size_t>(state.range(0)), GadgetVariant::Starred);
    Word x = gadget_seed(c);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_target(x, c));
    }
}
BENCHMARK(BM_BuildTarget)->RangeMultiplier(2)->Range(8, 64);

// Fresh matcher per batch so the lazily built states are part of the cost.
void BM_MatchGadget(benchmark::State& state) {
    GadgetConfig c = bench_config(static_cast<std::size_t>(state.range(0)),
                                  static_cast<GadgetVariant>(state.range(1)));
    Word x = gadget_seed(c);
    Regex r = build_target(x, c);
    Rng rng = derive_rng(7, 1);
    std::vector<Word> inputs;
    for (int i = 0; i < 256; ++i) {
        inputs.push_back(random_word(c.N, rng));
    }
    for (auto _ : state) {
        Matcher m(r);
        for (const Word& z : inputs) {
            benchmark::DoNotOptimize(m.matches(z));
        }
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inputs.size()));
}
BENCHMARK(BM_MatchGadget)->ArgsProduct({{8, 16, 32}, {0, 1, 2}});

void BM_DeterminizeNthFromEnd(benchmark::State& state) {
    Nfa a = nth_from_end_nfa(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(determinize(a).state_count);
    }
}
BENCHMARK(BM_DeterminizeNthFromEnd)->DenseRange(4, 14, 2);

} // namespace
BENCHMARK_MAIN();
