#include <benchmark/benchmark.h>

#include <memory>

#include "ergo/averaging.hpp"

using namespace ergo;

namespace {

GroupElement zi(std::int64_t n) { return ZdElem{{n}}; }

void BM_BallGrowth(benchmark::State& state) {
    int radius = static_cast<int>(state.range(0));
    for (auto _ : state) {
        WordMetric m(Group::heisenberg(), WordMetric::Config{14, 10'000'000});
        m.extend_to(radius);
        benchmark::DoNotOptimize(m.ball_size(radius));
    }
}
BENCHMARK(BM_BallGrowth)->Arg(4)->Arg(6)->Arg(8);

void BM_SparseInner(benchmark::State& state) {
    SparseVector u, v;
    for (std::int64_t i = 0; i < state.range(0); ++i) {
        u.set(BasisIndex::point(zi(i)), 1.0 / (i + 1.0));
        v.set(BasisIndex::point(zi(i / 2)), 0.5);
    }
    for (auto _ : state) benchmark::DoNotOptimize(inner(u, v));
}
BENCHMARK(BM_SparseInner)->Arg(64)->Arg(512)->Arg(4096);

void BM_FlatAverage(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    auto metric = std::make_shared<WordMetric>(Group::zd(1),
                                               WordMetric::Config{2048, 10'000'000});
    Representation reg = Representation::regular(metric->group());
    Cocycle b = Cocycle::z_generated(
        reg, metric, SparseVector::unit(BasisIndex::point(zi(0))));
    Array a = array_of(b);
    FiniteMeasure mu = uniform_measure(to_subset(metric->ball(N)));
    for (auto _ : state)
        benchmark::DoNotOptimize(flat_average(a, *metric, mu));
}
BENCHMARK(BM_FlatAverage)->Arg(50)->Arg(200)->Arg(800);

void BM_CocycleEval(benchmark::State& state) {
    auto metric = std::make_shared<WordMetric>(Group::zd(2),
                                               WordMetric::Config{64, 10'000'000});
    Representation rot = Representation::rotation({golden_angle(), 1.2});
    SparseVector x1, x2;
    x1.set(BasisIndex::coord(0), 1.0);
    x2.set(BasisIndex::coord(2), 1.0);
    int R = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Cocycle b = Cocycle::zd_generated(rot, metric, {x1, x2});
        double acc = 0.0;
        for (const auto& g : metric->ball(R)) acc += norm(b.eval(g));
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_CocycleEval)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
