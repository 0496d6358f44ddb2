#include <benchmark/benchmark.h>

#include "qgirth/basis.hpp"
#include "qgirth/graph.hpp"
#include "qgirth/word_girth.hpp"

using namespace qgirth;

static void BM_BuildGraph(benchmark::State& state) {
    const auto q = static_cast<std::uint64_t>(state.range(0));
    const GraphSpec spec = image_generators(select_generators(10, build_basis(11)), q);
    for (auto _ : state) benchmark::DoNotOptimize(build_graph(spec));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(q * q * q - q));
}
BENCHMARK(BM_BuildGraph)->Arg(13)->Arg(29)->Arg(59)->Unit(benchmark::kMillisecond);

static void BM_GirthBfs(benchmark::State& state) {
    const auto q = static_cast<std::uint64_t>(state.range(0));
    const GraphSpec spec = image_generators(select_generators(10, build_basis(11)), q);
    const CayleyGraph graph = build_graph(spec);
    for (auto _ : state) benchmark::DoNotOptimize(girth_bfs(graph.g, graph.identity));
}
BENCHMARK(BM_GirthBfs)->Arg(13)->Arg(29)->Arg(59)->Unit(benchmark::kMillisecond);

static void BM_GirthWords(benchmark::State& state) {
    const auto q = static_cast<std::uint64_t>(state.range(0));
    const GraphSpec spec = image_generators(select_generators(10, build_basis(11)), q);
    for (auto _ : state) benchmark::DoNotOptimize(girth_words(spec, 14));
}
BENCHMARK(BM_GirthWords)->Arg(13)->Arg(59)->Arg(199)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
