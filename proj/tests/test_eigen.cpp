#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "posbvp/eigen.hpp"
#include "posbvp/errors.hpp"
#include "support/oracles.hpp"

using namespace posbvp;
namespace num = std::numbers;

namespace {

Weight unit_weight(double L) { return Weight(L, [](double) { return 1.0; }); }

// relative agreement to `digits` significant digits
bool sig_digits(double a, double b, int digits) {
    return std::abs(a - b) <= 0.5 * std::pow(10.0, -digits + 1) * std::max(std::abs(a), std::abs(b));
}

}  // namespace

TEST_CASE("unit weight reproduces the analytic Dirichlet eigenvalues") {
    auto r1 = first_eigenvalue(unit_weight(1.0), {0.0, 1.0}, WeightKind::PositivePart);
    CHECK(std::abs(r1.lambda - num::pi * num::pi) <= 1e-8 * num::pi * num::pi);

    auto rpi = first_eigenvalue(unit_weight(num::pi), {0.0, num::pi}, WeightKind::PositivePart);
    CHECK(std::abs(rpi.lambda - 1.0) <= 1e-8);

    // interval scaling: [0, L] gives (pi/L)^2
    auto rh = first_eigenvalue(unit_weight(2.0), {0.0, 2.0}, WeightKind::PositivePart);
    CHECK(rh.lambda == doctest::Approx(num::pi * num::pi / 4.0).epsilon(1e-8));
}

TEST_CASE("shooting agrees with the finite-difference oracle to 4 digits") {
    auto two = oracles::two_hump_problem();
    auto four = oracles::four_hump_problem();

    auto check = [&](const Weight& a, Interval iv, WeightKind kind,
                     const std::function<double(double)>& w_oracle) {
        auto r = first_eigenvalue(a, iv, kind);
        const double fd = oracles::fd_first_eigenvalue(w_oracle, iv.lo, iv.hi, 4096);
        CHECK_MESSAGE(sig_digits(r.lambda, fd, 4), "shooting ", r.lambda, " vs fd ", fd);
    };

    check(two.weight, {0.0, 1.0}, WeightKind::PositivePart,
          [&](double x) { return std::max(two.weight(x), 0.0); });
    check(two.weight, {0.0, 1.0 / 3.0}, WeightKind::PositivePart,
          [&](double x) { return std::max(two.weight(x), 0.0); });
    check(four.weight, {0.0, 1.0}, WeightKind::AbsoluteValue,
          [&](double x) { return std::abs(four.weight(x)); });
    check(four.weight, {0.0, 1.0 / 7.0}, WeightKind::PositivePart,
          [&](double x) { return std::max(four.weight(x), 0.0); });
}

TEST_CASE("frozen references are reproduced to 4 significant digits") {
    auto two = oracles::two_hump_problem();
    auto four = oracles::four_hump_problem();
    auto lam = [](const Weight& a, Interval iv, WeightKind k) {
        return first_eigenvalue(a, iv, k).lambda;
    };
    CHECK(sig_digits(lam(two.weight, {0.0, 1.0}, WeightKind::PositivePart),
                     oracles::ref::lam_pos_two_hump, 4));
    CHECK(sig_digits(lam(two.weight, {0.0, 1.0 / 3.0}, WeightKind::PositivePart),
                     oracles::ref::lam_i1_two_hump, 4));
    CHECK(sig_digits(lam(four.weight, {0.0, 1.0}, WeightKind::AbsoluteValue),
                     oracles::ref::lam_abs_four_hump, 4));
    CHECK(sig_digits(lam(four.weight, {0.0, 1.0 / 7.0}, WeightKind::PositivePart),
                     oracles::ref::lam_i1_four_hump, 4));
}

TEST_CASE("eigenvalue scales inversely with the weight") {
    auto two = oracles::two_hump_problem();
    EigenOptions opt;  // tol = 1e-8
    const double base =
        first_eigenvalue(two.weight, {0.0, 1.0}, WeightKind::PositivePart, opt).lambda;
    for (double c : {0.5, 2.0, 10.0}) {
        const double scaled =
            first_eigenvalue(two.weight.with_scale(c), {0.0, 1.0}, WeightKind::PositivePart, opt)
                .lambda;
        CHECK(std::abs(scaled - base / c) <= 2.0 * opt.tol * (base / c));
    }
}

TEST_CASE("shrinking the interval raises the first eigenvalue") {
    auto two = oracles::two_hump_problem();
    const double full =
        first_eigenvalue(two.weight, {0.0, 1.0}, WeightKind::PositivePart).lambda;
    const double half =
        first_eigenvalue(two.weight, {0.0, 1.0 / 3.0}, WeightKind::PositivePart).lambda;
    CHECK(half > full);
}

TEST_CASE("bisection bookkeeping: bracket contains lambda, defects shrink") {
    auto two = oracles::two_hump_problem();
    EigenOptions opt;
    auto r = first_eigenvalue(two.weight, {0.0, 1.0}, WeightKind::PositivePart, opt);
    CHECK(r.bracket_lo <= r.lambda);
    CHECK(r.lambda <= r.bracket_hi);
    CHECK(r.bracket_hi - r.bracket_lo <= 1.1 * opt.tol * r.lambda);
    REQUIRE(!r.residual_history.empty());
    for (std::size_t i = 0; i + 1 < r.residual_history.size(); ++i)
        CHECK(r.residual_history[i + 1] <= r.residual_history[i] + 1e-15);
    CHECK(r.residual == doctest::Approx(r.residual_history.back()));
}

TEST_CASE("vanishing weight part is rejected") {
    Weight pos(1.0, [](double) { return 1.0; });
    CHECK_THROWS_AS(first_eigenvalue(pos, {0.0, 1.0}, WeightKind::NegativePart), WeightVanishes);
}

TEST_CASE("unreachable rotation overflows the bracket guard") {
    // lambda_1 = (pi / 1e-9)^2 ~ 1e19 exceeds the 1e16 guard
    Weight w(1.0, [](double) { return 1.0; });
    CHECK_THROWS_AS(first_eigenvalue(w, {0.0, 1e-9}, WeightKind::PositivePart), BracketOverflow);
}

TEST_CASE("eigenfunction of the unit weight is the normalized sine") {
    auto r = first_eigenvalue(unit_weight(1.0), {0.0, 1.0}, WeightKind::PositivePart);
    auto phi = eigenfunction(unit_weight(1.0), r);
    REQUIRE(!phi.samples.empty());
    CHECK(phi.sup_norm == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(phi.samples.front().u) <= 1e-9);
    CHECK(std::abs(phi.samples.back().u) <= 1e-6);
    // lambda is bisected to rel tol 1e-8, which perturbs the profile at ~1e-6
    for (const auto& s : phi.samples)
        CHECK(std::abs(s.u - std::sin(num::pi * s.x)) <= 5e-6);
}
