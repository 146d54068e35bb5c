#include <benchmark/benchmark.h>

#include "kfc/bordered.hpp"
#include "kfc/invariants.hpp"
#include "kfc/models.hpp"
#include "kfc/reduce.hpp"
#include "kfc/region.hpp"

using namespace kfc;

namespace {

CfkComplex tensorPower(const CfkComplex& c, int k) {
    CfkComplex out = c;
    for (int i = 1; i < k; ++i) out = tensor(out, c);
    return out;
}

void BM_BoxTensor(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    TypeA a = cfaCable(p);
    TypeD d = cfdTrefoil0();
    for (auto _ : state) benchmark::DoNotOptimize(boxTensor(a, d));
}
BENCHMARK(BM_BoxTensor)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_EdgeReduceCable(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    HatComplex raw = boxTensor(cfaCable(p), cfdTrefoil0());
    for (auto _ : state) benchmark::DoNotOptimize(edgeReduce(raw));
}
BENCHMARK(BM_EdgeReduceCable)->Arg(2)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_HatCable(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hatCable(p));
}
BENCHMARK(BM_HatCable)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_ColumnHomology(benchmark::State& state) {
    CfkComplex c = tensorPower(t23(), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        RegionComplex rc = extractRegion(c, Region::column());
        benchmark::DoNotOptimize(homology(rc));
    }
}
BENCHMARK(BM_ColumnHomology)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void BM_InvariantReport(benchmark::State& state) {
    CfkComplex c = tensorPower(t23(), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(report(c));
}
BENCHMARK(BM_InvariantReport)->Arg(1)->Arg(2)->Arg(3);

void BM_EpsilonEquivalence(benchmark::State& state) {
    CfkComplex a = staircase({{2, 1, 1, 2}});
    CfkComplex b = tensorPower(t23(), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(epsilonEquivalent(a, b));
}
BENCHMARK(BM_EpsilonEquivalence)->Arg(1)->Arg(2);

void BM_KpPipeline(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kpPipeline(p));
}
BENCHMARK(BM_KpPipeline)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
