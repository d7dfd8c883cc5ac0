#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "posbvp/hypotheses.hpp"
#include "posbvp/report.hpp"
#include "support/oracles.hpp"

using namespace posbvp;
namespace num = std::numbers;

namespace {

ProblemSpec resonant_violation() {
    // a = 1, g = 2 pi^2 s + s^3: the near-zero slope 2 pi^2 exceeds
    // lambda(a+) = pi^2, so the near-zero comparison must fail
    Weight a(1.0, [](double) { return 1.0; }, SignPartition{{{0.0, 1.0}}, 0.0});
    Nonlinearity g([](double s) { return 2.0 * num::pi * num::pi * s + s * s * s; },
                   "resonant");
    g.near_zero_class = NearZeroClass::NonNegative;
    g.delta = 1.0;
    g.descriptors = AsymptoticDescriptors{2.0 * num::pi * num::pi, 2.0 * num::pi * num::pi,
                                          std::numeric_limits<double>::infinity(),
                                          DescriptorSource::UserDeclared};
    return ProblemSpec{std::move(a), std::move(g), "resonant"};
}

}  // namespace

TEST_CASE("two-hump configuration passes through the nonnegative near-zero case") {
    auto p = oracles::two_hump_problem();
    auto r = check_all(p);
    CHECK(r.overall == Verdict::Pass);
    CHECK(r.h1.verdict == Verdict::Pass);
    CHECK(r.h1.partition.size() == 2);
    CHECK(r.h2.verdict == Verdict::Pass);
    CHECK(r.h3.verdict == Verdict::Pass);
    CHECK(r.h3.cls == NearZeroClass::NonNegative);
    CHECK(r.h3.weight_kind == WeightKind::PositivePart);
    REQUIRE(r.h3.eigen.has_value());
    CHECK(r.h3.eigen->lambda == doctest::Approx(oracles::ref::lam_pos_two_hump).epsilon(5e-4));
    CHECK(r.h3.margin == doctest::Approx(r.h3.eigen->lambda).epsilon(1e-9));  // g0_sup = 0
    REQUIRE(r.h4.entries.size() == 2);
    for (const auto& e : r.h4.entries) {
        CHECK(e.verdict == Verdict::Pass);
        REQUIRE(e.eigen.has_value());
        CHECK(e.margin ==
              doctest::Approx(oracles::ref::slope_at_infinity_two_hump - e.eigen->lambda)
                  .epsilon(1e-9));
    }
}

TEST_CASE("four-hump configuration passes through the sign-changing case") {
    auto p = oracles::four_hump_problem();
    auto r = check_all(p);
    CHECK(r.overall == Verdict::Pass);
    CHECK(r.h3.cls == NearZeroClass::SignChanging);
    CHECK(r.h3.weight_kind == WeightKind::AbsoluteValue);
    REQUIRE(r.h3.eigen.has_value());
    CHECK(r.h3.eigen->lambda == doctest::Approx(oracles::ref::lam_abs_four_hump).epsilon(5e-4));
    CHECK(r.h1.partition.size() == 4);
    CHECK(r.h4.entries.size() == 4);
    // g grows like s^3, so every growth margin is infinite
    for (const auto& e : r.h4.entries) CHECK(std::isinf(e.margin));
}

TEST_CASE("resonant slope fails the near-zero comparison with the right margin") {
    auto p = resonant_violation();
    auto h3 = check_h3(p);
    CHECK(h3.verdict == Verdict::Fail);
    // margin = lambda - g0_sup = pi^2 - 2 pi^2 = -pi^2
    CHECK(h3.margin == doctest::Approx(-num::pi * num::pi).epsilon(1e-6));

    auto all = check_all(p);
    CHECK(all.overall == Verdict::Fail);
    CHECK(all.h4.verdict == Verdict::Pass);  // growth is still superlinear
}

TEST_CASE("margins inside the tolerance band are indeterminate") {
    auto p = resonant_violation();
    // push g0_sup onto the threshold: margin ~ 0 within the band
    auto h3 = check_h3(p);
    REQUIRE(h3.eigen.has_value());
    const double lambda = h3.eigen->lambda;
    p.g.descriptors->g0_inf = lambda;
    p.g.descriptors->g0_sup = lambda;
    auto on_edge = check_h3(p);
    CHECK(on_edge.verdict == Verdict::Indeterminate);
}

TEST_CASE("checks are deterministic across repeated runs") {
    auto p = oracles::two_hump_problem();
    auto a = check_all(p);
    auto b = check_all(p);
    CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("grid-estimated descriptors cap the verdict at advisory") {
    auto p = oracles::two_hump_problem();
    p.g.descriptors.reset();  // force estimation
    auto r = check_all(p);
    CHECK(r.overall == Verdict::PassAdvisory);
    CHECK(r.h3.descriptors.source == DescriptorSource::GridEstimated);
}

TEST_CASE("threshold scan: growth verdict flips exactly at lambda-star") {
    auto p = oracles::two_hump_problem();
    // lambda-star = max_i lambda_1(I_i) / g_infty
    const double li = first_eigenvalue(p.weight, {0.0, 1.0 / 3.0}, WeightKind::PositivePart).lambda;
    const double expected = li / oracles::ref::slope_at_infinity_two_hump;

    std::vector<double> scales;
    for (double f : {0.25, 0.5, 0.8, 0.95, 1.05, 1.25, 2.0, 4.0}) scales.push_back(f * expected);
    auto scan = lambda_threshold_scan(p, scales);
    CHECK(scan.lambda_star == doctest::Approx(expected).epsilon(1e-6));
    REQUIRE(scan.points.size() == scales.size());
    for (const auto& pt : scan.points) {
        if (pt.scale < 0.99 * scan.lambda_star) CHECK(pt.h4 == Verdict::Fail);
        if (pt.scale > 1.01 * scan.lambda_star) CHECK(pt.h4 == Verdict::Pass);
    }
    // direct confirmation on both sides of the threshold
    auto below = check_h4(ProblemSpec{p.weight.with_scale(0.95 * expected), p.g, "below"},
                          *p.weight.partition());
    auto above = check_h4(ProblemSpec{p.weight.with_scale(1.05 * expected), p.g, "above"},
                          *p.weight.partition());
    CHECK(below.verdict == Verdict::Fail);
    CHECK(above.verdict == Verdict::Pass);
}

TEST_CASE("verdicts round-trip through their string names") {
    for (Verdict v : {Verdict::Pass, Verdict::PassAdvisory, Verdict::Indeterminate,
                      Verdict::Fail})
        CHECK(verdict_from_string(to_string(v)) == v);
}

TEST_CASE("hypothesis report round-trips through JSON") {
    auto p = oracles::two_hump_problem();
    auto r = check_all(p);
    auto j = to_json(r);
    auto back = hypothesis_report_from_json(j);
    CHECK(to_json(back).dump() == j.dump());
    CHECK(back.overall == r.overall);
    CHECK(back.h3.margin == doctest::Approx(r.h3.margin).epsilon(1e-15));
}
