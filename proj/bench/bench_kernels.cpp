// Serial reference kernels against their OpenMP versions on windows of the
// x/y system.

#include "symdyn/construction.hpp"
#include "symdyn/interval_map.hpp"
#include "symdyn/kernels.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <map>

using namespace symdyn;
using namespace symdyn::kernels;

namespace {

struct Fixture {
    std::vector<Symbol> x, y;
    SampleSet set;
    std::vector<std::uint64_t> offsets;

    explicit Fixture(std::size_t horizon) {
        x = construction::point_x().materialize(3 * horizon);
        y = construction::point_y().materialize(3 * horizon);
        set.texts = {x, y};
        for (std::uint32_t src = 0; src < 2; ++src)
            for (std::uint64_t off = 0; off < horizon; off += 7) set.samples.push_back({src, off});
        for (std::uint64_t off = 0; off < horizon; ++off)
            if (y[off] == 1 && y[off + 1] == 0) offsets.push_back(off);
    }
};

const Fixture& fixture(std::size_t horizon) {
    static std::map<std::size_t, Fixture> cache;
    return cache.try_emplace(horizon, horizon).first->second;
}

template <bool Parallel>
void BM_Hits(benchmark::State& state) {
    const auto& f = fixture(state.range(0));
    const std::vector<Symbol> pattern{0, 0, 0, 0};
    for (auto _ : state) {
        auto r = Parallel ? parallel::hits(f.set, pattern, state.range(0)) : serial::hits(f.set, pattern, state.range(0));
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void BM_Splits(benchmark::State& state) {
    const auto& f = fixture(state.range(0));
    for (auto _ : state) {
        auto r = Parallel ? parallel::splits(f.set, 2, state.range(0)) : serial::splits(f.set, 2, state.range(0));
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void BM_PairNeeds(benchmark::State& state) {
    const auto& f = fixture(state.range(0));
    static const std::vector<Symbol> reference(64, 0);
    PairProblem p;
    p.set = &f.set;
    p.levels = 8;
    for (const auto& s : f.set.samples) {
        const Text t = f.set.texts[s.source].subspan(s.offset);
        p.level.push_back(std::max<std::uint32_t>(1, lcp(t, f.x, 8)));
    }
    p.reference = reference;
    p.o_depth = 2;
    p.trigger_text = Text(f.x);
    p.horizon = state.range(0);
    for (auto _ : state) {
        auto r = Parallel ? parallel::pair_needs(p) : serial::pair_needs(p);
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void BM_ZeroBlocks(benchmark::State& state) {
    const auto& f = fixture(state.range(0));
    for (auto _ : state) {
        auto r = Parallel ? parallel::zero_block_violations(f.x, f.y, f.offsets, 2, state.range(0))
                          : serial::zero_block_violations(f.x, f.y, f.offsets, 2, state.range(0));
        benchmark::DoNotOptimize(r);
    }
}

template <bool Parallel>
void BM_WitnessSearch(benchmark::State& state) {
    const auto f = interval::example_es_map();
    interval::WitnessSearch s;
    s.x = Rational(7, 10);
    s.eps = Rational(1, 1000);
    s.grid_denominator = BigInt(1) << state.range(0);
    for (auto _ : state) {
        auto r = Parallel ? interval::eventual_sensitivity_witness(f, s)
                          : interval::eventual_sensitivity_witness_serial(f, s);
        benchmark::DoNotOptimize(r);
    }
}

}  // namespace

BENCHMARK(BM_Hits<false>)->Arg(2000)->Arg(10000);
BENCHMARK(BM_Hits<true>)->Arg(2000)->Arg(10000);
BENCHMARK(BM_Splits<false>)->Arg(2000);
BENCHMARK(BM_Splits<true>)->Arg(2000);
BENCHMARK(BM_PairNeeds<false>)->Arg(2000)->Arg(10000);
BENCHMARK(BM_PairNeeds<true>)->Arg(2000)->Arg(10000);
BENCHMARK(BM_ZeroBlocks<false>)->Arg(10000)->Arg(100000);
BENCHMARK(BM_ZeroBlocks<true>)->Arg(10000)->Arg(100000);
BENCHMARK(BM_WitnessSearch<false>)->Arg(16)->Arg(20);
BENCHMARK(BM_WitnessSearch<true>)->Arg(16)->Arg(20);

BENCHMARK_MAIN();
