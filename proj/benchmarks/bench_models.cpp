#include <benchmark/benchmark.h>

#include "ddosml/flowdata.hpp"
#include "ddosml/metrics.hpp"
#include "ddosml/model.hpp"
#include "ddosml/preprocess.hpp"
#include "ddosml/synth.hpp"

namespace {

using namespace ddosml;

FeatureMatrix scaled_iotmix(std::size_t rows, std::uint64_t seed) {
    const auto m = to_matrix(clean(gen_iot_mix({rows, 0.3, seed, 1.0})).first);
    return transform_minmax(fit_minmax(m), m);
}

void BM_Fit(benchmark::State& state, ModelKind kind) {
    const auto train = scaled_iotmix(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit(kind, train, ModelParams{}));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Predict(benchmark::State& state, ModelKind kind) {
    const auto train = scaled_iotmix(4000, 7);
    const auto test = scaled_iotmix(static_cast<std::size_t>(state.range(0)), 8);
    const auto model = fit(kind, train, ModelParams{});
    for (auto _ : state) {
        benchmark::DoNotOptimize(predict(model, test));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Metrics(benchmark::State& state) {
    const auto m = scaled_iotmix(static_cast<std::size_t>(state.range(0)), 7);
    const auto& y = m.labels();
    Labels p(y.rbegin(), y.rend());
    for (auto _ : state) {
        benchmark::DoNotOptimize(report(confusion(y, p)));
    }
}

void BM_Synth(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gen_iot_mix({static_cast<std::size_t>(state.range(0)), 0.3, ++seed, 1.0}));
    }
}

} // namespace

BENCHMARK_CAPTURE(BM_Fit, gbt, ModelKind::gbt)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Fit, knn, ModelKind::knn)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Fit, sgd, ModelKind::sgd)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Fit, gnb, ModelKind::gnb)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Predict, gbt, ModelKind::gbt)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Predict, knn, ModelKind::knn)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Predict, sgd, ModelKind::sgd)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Predict, gnb, ModelKind::gnb)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Metrics)->Arg(1000)->Arg(100000);
BENCHMARK(BM_Synth)->Arg(1000)->Arg(10000);
BENCHMARK_MAIN();
