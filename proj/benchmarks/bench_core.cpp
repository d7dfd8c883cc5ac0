#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "posbvp/eigen.hpp"
#include "posbvp/green.hpp"
#include "posbvp/integrate.hpp"
#include "posbvp/shooting.hpp"

using namespace posbvp;
namespace num = std::numbers;

namespace {

ProblemSpec two_hump() {
    SignPartition part;
    part.intervals = {{0.0, 1.0 / 3.0}, {2.0 / 3.0, 1.0}};
    Weight a(1.0, [](double x) { return std::sin(3 * num::pi * x); }, part);
    Nonlinearity g(
        [](double s) {
            const double poly = 20.0 * std::pow(s, 1.2) - 6.0 * s * s * s + s * s * s * s;
            return std::min(poly, 400.0 * s * std::atan(s));
        },
        "bench");
    return ProblemSpec{std::move(a), std::move(g), "two-hump"};
}

void BM_integrate(benchmark::State& state) {
    auto p = two_hump();
    IntegrateOptions opt;
    opt.tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state) {
        auto t = integrate(p, 0.0, 0.0, 5.0, 1.0, opt);
        benchmark::DoNotOptimize(t.end_u());
    }
}

void BM_first_eigenvalue(benchmark::State& state) {
    auto p = two_hump();
    for (auto _ : state) {
        auto r = first_eigenvalue(p.weight, {0.0, 1.0}, WeightKind::PositivePart);
        benchmark::DoNotOptimize(r.lambda);
    }
}

void BM_apply_operator(benchmark::State& state) {
    auto p = two_hump();
    std::vector<double> xs(65);
    for (int i = 0; i < 65; ++i) xs[i] = i / 64.0;
    const int quad_n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto v = apply_operator(
            p, [](double x) { return x * (1.0 - x); }, xs, quad_n);
        benchmark::DoNotOptimize(v.data());
    }
}

void BM_poincare_scan(benchmark::State& state) {
    auto p = two_hump();
    std::vector<double> cs(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = 12.0 * i / (cs.size() - 1);
    for (auto _ : state) {
        auto pts = sample_poincare(p, cs, {});
        benchmark::DoNotOptimize(pts.data());
    }
}

}  // namespace

BENCHMARK(BM_integrate)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(BM_first_eigenvalue);
BENCHMARK(BM_apply_operator)->Arg(256)->Arg(1024);
BENCHMARK(BM_poincare_scan)->Arg(61)->Arg(481);

BENCHMARK_MAIN();
