#include "knotopt/catalog.hpp"
#include "knotopt/harness.hpp"
#include "knotopt/parallel.hpp"
#include "knotopt/pl_approx.hpp"

#include <benchmark/benchmark.h>

using namespace knotopt;

namespace {

const CurveCatalogEntry& gompertz()
{
    static const CurveCatalog catalog = default_catalog();
    return catalog.at("gompertz1b");
}

std::vector<double> grid(int n)
{
    const auto& e = gompertz();
    return KnotVector::equally_spaced(e.a, e.b, n).points();
}

void BM_SegmentGapsSerial(benchmark::State& state)
{
    const auto pts = grid(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(segment_gaps_serial(gompertz().curve, pts));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SegmentGapsParallel(benchmark::State& state)
{
    const auto pts = grid(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(segment_gaps_parallel(gompertz().curve, pts));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CatalogSerial(benchmark::State& state)
{
    const auto catalog = default_catalog();
    ExperimentSpec spec;
    for (auto _ : state) benchmark::DoNotOptimize(run_catalog_serial(catalog, spec));
}

void BM_CatalogParallel(benchmark::State& state)
{
    const auto catalog = default_catalog();
    ExperimentSpec spec;
    for (auto _ : state) benchmark::DoNotOptimize(run_catalog(catalog, spec));
}

}  // namespace

BENCHMARK(BM_SegmentGapsSerial)->Arg(8)->Arg(64)->Arg(512)->Arg(4096)->UseRealTime();
BENCHMARK(BM_SegmentGapsParallel)->Arg(8)->Arg(64)->Arg(512)->Arg(4096)->UseRealTime();
BENCHMARK(BM_CatalogSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CatalogParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
