#include <benchmark/benchmark.h>

#include "kdescent/cover_search.hpp"
#include "kdescent/descent.hpp"
#include "kdescent/factor.hpp"
#include "kdescent/lemma_verifier.hpp"
#include "kdescent/residue.hpp"

using namespace kdescent;

static void BM_ImageOfG(benchmark::State& state) {
    const ResidueRing ring(static_cast<unsigned>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(image_of_g(ring, 1).size());
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ring.size()));
}
BENCHMARK(BM_ImageOfG)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

static void BM_VerifyNoSolution(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_no_solution(k, 1).holds);
}
BENCHMARK(BM_VerifyNoSolution)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_VerifyCubeClosure(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_cube_closure(k, 1).holds);
}
BENCHMARK(BM_VerifyCubeClosure)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

static void BM_FactorEisenstein(benchmark::State& state) {
    const EisensteinInt x(123457, -987651);
    for (auto _ : state)
        benchmark::DoNotOptimize(factor(x).factors.size());
}
BENCHMARK(BM_FactorEisenstein)->Unit(benchmark::kMicrosecond);

static void BM_Classify(benchmark::State& state) {
    const auto a = eval_g(mpq_class(37, 11), mpq_class(-5, 13));
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(a).kind);
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMicrosecond);

static void BM_SearchCubicCover(benchmark::State& state) {
    const Polynomial f({6, 0, 0, 3});
    const auto height = static_cast<unsigned long>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(search(f, height, 1).points_tested);
}
BENCHMARK(BM_SearchCubicCover)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
