#include <benchmark/benchmark.h>

#include <array>
#include <cmath>
#include <complex>

#include "qws/jacobi.hpp"
#include "qws/moments.hpp"
#include "qws/stieltjes.hpp"
#include "qws/walk.hpp"

namespace {

using namespace qws;

const double h = 1.0 / std::sqrt(2.0);

void BM_evolve(benchmark::State& state) {
    const Coin coin = hadamard_coin();
    const QubitState start = make_state(h, complexd(0.0, h));
    const int steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(evolve(coin, start, steps));
    }
    state.SetComplexityN(steps);
}
BENCHMARK(BM_evolve)->Arg(256)->Arg(1024)->Arg(4096)->Complexity(benchmark::oNSquared);

void BM_moment_quadrature(benchmark::State& state) {
    const MeasureSpec spec{Symmetric{h}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(moment_quadrature(20, spec));
    }
}
BENCHMARK(BM_moment_quadrature);

void BM_transform_quadrature(benchmark::State& state) {
    const MeasureSpec spec{Asymmetric{h, 1.0}};
    const complexd z(0.7, 1.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(transform_quadrature(spec, z));
    }
}
BENCHMARK(BM_transform_quadrature);

void BM_cf_eval(benchmark::State& state) {
    const JacobiSeq seq = jacobi_symmetric(h);
    const HalfPlanePoint z(complexd(0.7, 1.1));
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(cf_eval(z, seq, depth));
    }
}
BENCHMARK(BM_cf_eval)->Arg(80)->Arg(320);

void BM_jacobi_recovery(benchmark::State& state) {
    const MomentSeq moments = moments_of(MeasureSpec{Asymmetric{0.6, 0.5}}, 18);
    for (auto _ : state) {
        benchmark::DoNotOptimize(jacobi_from_moments(moments, 8));
    }
}
BENCHMARK(BM_jacobi_recovery);

void BM_invert(benchmark::State& state) {
    const Transform transform = [](complexd z) { return g_symmetric(z, h); };
    constexpr std::array<double, 5> eps = {1e-2, 3e-3, 1e-3, 3e-4, 1e-4};
    for (auto _ : state) {
        benchmark::DoNotOptimize(invert(transform, 0.25, eps));
    }
}
BENCHMARK(BM_invert);

}  // namespace

BENCHMARK_MAIN();
