#include <benchmark/benchmark.h>

#include "fkd/analysis.hpp"
#include "fkd/catalog.hpp"
#include "fkd/hom.hpp"

using namespace fkd;
using W = WeightLabel;

namespace {

const std::pair<W, W> kPairs[] = {
    {W::t0, W::e_rho},
    {W::s_minus, W::e_rho},
    {W::s_minus, W::s_minus},
    {W::e_minus, W::s_minus},
    {W::s_plus, W::s_minus},
};

}  // namespace

static void BM_tensor(benchmark::State& state) {
    auto [a, b] = kPairs[state.range(0)];
    const GModule& x = catalog::simple(a);
    const GModule& y = catalog::simple(b);
    for (auto _ : state) benchmark::DoNotOptimize(tensor(x, y));
    state.counters["dim"] = x.dim() * y.dim();
}
BENCHMARK(BM_tensor)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_hom_space_end(benchmark::State& state) {
    auto [a, b] = kPairs[state.range(0)];
    GModule m = tensor(catalog::simple(a), catalog::simple(b));
    for (auto _ : state) benchmark::DoNotOptimize(hom_space(m, m));
    state.counters["dim"] = m.dim();
}
BENCHMARK(BM_hom_space_end)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

static void BM_decompose(benchmark::State& state) {
    auto [a, b] = kPairs[state.range(0)];
    GModule m = tensor(catalog::simple(a), catalog::simple(b));
    for (auto _ : state) benchmark::DoNotOptimize(decompose(m));
    state.counters["dim"] = m.dim();
}
BENCHMARK(BM_decompose)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_decompose)->Arg(4)->Iterations(1)->Unit(benchmark::kMillisecond);

static void BM_socle_filtration(benchmark::State& state) {
    const GModule& m = catalog::named(static_cast<catalog::Named>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(socle_filtration(m));
    state.counters["dim"] = m.dim();
}
BENCHMARK(BM_socle_filtration)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_char_mul(benchmark::State& state) {
    GradedChar p = catalog::projective_char(W::eps);
    for (auto _ : state) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_char_mul);

BENCHMARK_MAIN();
