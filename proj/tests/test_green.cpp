#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "posbvp/green.hpp"
#include "support/oracles.hpp"

using namespace posbvp;
namespace num = std::numbers;

namespace {

ProblemSpec linear_problem(double L, double slope = 1.0) {
    Weight a(L, [](double) { return 1.0; });
    Nonlinearity g([slope](double s) { return slope * s; }, "linear");
    return ProblemSpec{std::move(a), std::move(g), "linear"};
}

std::vector<double> uniform_grid(double L, int n) {
    std::vector<double> xs(n);
    for (int i = 0; i < n; ++i) xs[i] = L * i / (n - 1);
    return xs;
}

}  // namespace

TEST_CASE("kernel identities hold at random argument pairs") {
    const double L = 1.7;
    GreenKernel G{L};
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> unif(0.0, L);
    for (int i = 0; i < 10000; ++i) {
        const double x = unif(rng);
        const double xi = unif(rng);
        const double direct = std::min(x, xi) * (L - std::max(x, xi)) / L;
        CHECK(G(x, xi) == doctest::Approx(direct).epsilon(1e-14));
        CHECK(G(x, xi) == doctest::Approx(G(xi, x)).epsilon(1e-14));
        CHECK(G(x, xi) >= 0.0);
        CHECK(G(x, xi) <= L / 4.0 + 1e-15);
    }
    CHECK(G(0.0, 0.5) == 0.0);
    CHECK(G(L, 0.5) == 0.0);
    CHECK(G(L / 2, L / 2) == doctest::Approx(L / 4.0));
}

TEST_CASE("operator reproduces the sine eigenfunction identity") {
    // with a = 1, g = s: Phi sin(pi x / L) = (L/pi)^2 sin(pi x / L)
    const double L = 1.0;
    auto p = linear_problem(L);
    auto xs = uniform_grid(L, 33);
    const double factor = (L / num::pi) * (L / num::pi);

    auto max_err = [&](int quad_n) {
        auto v = apply_operator(
            p, [L](double x) { return std::sin(num::pi * x / L); }, xs, quad_n);
        double e = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i)
            e = std::max(e, std::abs(v[i] - factor * std::sin(num::pi * xs[i] / L)));
        return e;
    };

    const double e64 = max_err(64);
    const double e128 = max_err(128);
    const double e256 = max_err(256);
    CHECK(e64 / e128 >= 8.0);   // Simpson: ~16x per doubling
    CHECK(e64 / e128 <= 40.0);
    CHECK(e128 / e256 >= 8.0);
    CHECK(e128 / e256 <= 40.0);
    CHECK(e256 <= 1e-8);
}

TEST_CASE("zero input maps to zero") {
    auto p = oracles::two_hump_problem();
    auto xs = uniform_grid(1.0, 17);
    auto v = apply_operator(p, [](double) { return 0.0; }, xs, 256);
    for (double y : v) CHECK(y == 0.0);
}

TEST_CASE("sup bound by the kernel maximum on short intervals") {
    // |Phi u| <= (L/4) max|a| max|g~(u)| whenever L <= 2
    for (double L : {0.8, 1.0, 2.0}) {
        Weight a(L, [L](double x) { return std::sin(3 * num::pi * x / L); });
        Nonlinearity g([](double s) { return 20.0 * std::pow(s, 1.2) - 6.0 * s * s * s; },
                       "mixed");
        ProblemSpec p{std::move(a), std::move(g), "bound"};
        auto u = [L](double x) { return 0.5 + 0.4 * std::sin(5.0 * x + 0.3) * (x / L); };

        auto xs = uniform_grid(L, 257);
        auto v = apply_operator(p, u, xs, 512);
        double lhs = 0.0;
        for (double y : v) lhs = std::max(lhs, std::abs(y));

        double max_ag = 0.0;
        for (int i = 0; i <= 4096; ++i) {
            const double x = L * i / 4096.0;
            max_ag = std::max(max_ag, std::abs(p.weight(x)) * std::abs(p.g.extended(u(x))));
        }
        CHECK(lhs <= (L / 4.0) * max_ag * (1.0 + 1e-9) + 1e-12);
    }
}

TEST_CASE("analytic solution has tiny residual; perturbation is seen") {
    // u = sin(pi x) solves u'' + pi^2 u = 0 with Dirichlet data on [0, 1]
    const double L = 1.0;
    auto p = linear_problem(L, num::pi * num::pi);

    auto make_profile = [&](const std::function<double(double)>& f,
                            const std::function<double(double)>& df) {
        SolutionProfile u;
        const int n = 513;
        for (int i = 0; i < n; ++i) {
            const double x = L * i / (n - 1);
            u.samples.push_back({x, f(x), df(x)});
        }
        u.sup_norm = 1.0;
        return u;
    };

    auto exact = make_profile([](double x) { return std::sin(num::pi * x); },
                              [](double x) { return num::pi * std::cos(num::pi * x); });
    CHECK(operator_residual(p, exact, 1024) <= 1e-8);

    auto bent = make_profile(
        [](double x) { return std::sin(num::pi * x) + 0.05 * std::sin(2 * num::pi * x); },
        [](double x) {
            return num::pi * std::cos(num::pi * x) + 0.1 * num::pi * std::cos(2 * num::pi * x);
        });
    CHECK(operator_residual(p, bent, 1024) >= 0.01);
}
