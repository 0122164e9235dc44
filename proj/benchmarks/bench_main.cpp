#include <benchmark/benchmark.h>

#include "orthoharm/cycles.hpp"
#include "orthoharm/series.hpp"
#include "orthoharm/special_functions.hpp"
#include "orthoharm/tools/config.hpp"

using namespace orthoharm;

namespace {

DomainPoint sample_point(int n) {
    CVec z(n);
    z(0) = cplx(0.1, 1.5);
    for (int k = 1; k < n; ++k) z(k) = cplx(0.05 * k, 0.2 / k);
    return DomainPoint(z);
}

void BM_EnumerateMajorant(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto ctx = tools::build_context(tools::standard_lattice(n));
    const DomainPoint Z = sample_point(n);
    const double bound = static_cast<double>(state.range(1));
    std::size_t count = 0;
    for (auto _ : state) {
        const auto v = enumerate_majorant(ctx->lattice, ctx->frame, Z, Rational(1), ctx->cosets.front(), bound);
        count = v.size();
        benchmark::DoNotOptimize(count);
    }
    state.counters["vectors"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateMajorant)->Args({1, 40})->Args({2, 40})->Args({2, 80})->Args({3, 20});

void BM_Hyp2f1(benchmark::State& state) {
    double z = -0.9;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hyp2f1(0.5, 2.5, 3.5, z));
        z = z < 0.9 ? z + 1e-3 : -0.9;
    }
}
BENCHMARK(BM_Hyp2f1);

void BM_PTilde(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double sign = state.range(1) > 0 ? 1.0 : -1.0;
    RVec lam = RVec::Zero(n + 2);
    lam(0) = 0.3;
    lam(1) = sign > 0 ? 0.1 : 2.0;
    lam(2) = 1.0;
    const KernelParams p{lam, n + 2};
    const DomainPoint Z = sample_point(n);
    for (auto _ : state) benchmark::DoNotOptimize(p_tilde(p, Z));
}
BENCHMARK(BM_PTilde)->Args({2, 1})->Args({2, -1})->Args({4, 1})->Args({4, -1});

void BM_SeriesEval(benchmark::State& state) {
    const auto ctx = tools::build_context(tools::standard_lattice(2));
    const SeriesSpec spec{ctx, ctx->cosets.front(), Rational(1), 4, static_cast<double>(state.range(0)),
                          static_cast<int>(state.range(1))};
    const DomainPoint Z = sample_point(2);
    for (auto _ : state) benchmark::DoNotOptimize(eval_omega(spec, Z));
}
BENCHMARK(BM_SeriesEval)->Args({40, 1})->Args({80, 1});

void BM_TubeBoundary(benchmark::State& state) {
    RVec mu = RVec::Zero(4);
    mu(2) = 1.0;
    const CycleChart chart = make_chart_C(mu, {{1.1, 1.9}, {-0.4, 0.6}});
    const SmoothBump bump{{{1, 1.5, 0.4}, {2, 0.1, 0.5}}};
    const ScalarFn h = bump.as_function();
    const TopFn H = p_tilde_field({mu, 3});
    for (auto _ : state) benchmark::DoNotOptimize(tube_boundary_integral(h, H, 0.05, chart, false));
}
BENCHMARK(BM_TubeBoundary)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
