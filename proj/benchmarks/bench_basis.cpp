#include <benchmark/benchmark.h>

#include "qgirth/basis.hpp"
#include "qgirth/words.hpp"

using namespace qgirth;

static void BM_EnumerateNormP(benchmark::State& state) {
    const auto p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_norm_p(p));
}
BENCHMARK(BM_EnumerateNormP)->Arg(11)->Arg(101)->Arg(1009);

static void BM_BuildBasis(benchmark::State& state) {
    const auto p = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_basis(p));
}
BENCHMARK(BM_BuildBasis)->Arg(11)->Arg(101)->Arg(1009);

static void BM_Factor(benchmark::State& state) {
    const PrimeBasis basis = build_basis(19);
    const GeneratorSet gens = select_generators(12, basis);
    Word w;
    for (std::uint32_t i = 0; w.size() < 8; ++i) {
        const std::uint32_t g = i % gens.size();
        if (!w.empty() && g == gens.inverse_letter[w.back()]) continue;
        w.push_back(g);
    }
    const Quaternion target = word_to_quaternion(w, gens);
    for (auto _ : state) benchmark::DoNotOptimize(factor(target, basis));
}
BENCHMARK(BM_Factor);
