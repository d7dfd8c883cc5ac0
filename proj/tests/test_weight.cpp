#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "posbvp/errors.hpp"
#include "posbvp/weight.hpp"

using namespace posbvp;
namespace num = std::numbers;

namespace {

Weight sin_weight(int k, double L = 1.0) {
    const double omega = k * num::pi / L;
    return Weight(L, [omega](double x) { return std::sin(omega * x); });
}

}  // namespace

TEST_CASE("detected partition of sin(7 pi x) hits the analytic endpoints k/7") {
    auto part = detect_sign_partition(sin_weight(7));
    REQUIRE(part.size() == 4);
    // nonnegativity intervals are [2j/7, (2j+1)/7]
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(part.intervals[j].lo == doctest::Approx(2.0 * j / 7.0).epsilon(1e-5));
        CHECK(part.intervals[j].hi == doctest::Approx((2.0 * j + 1) / 7.0).epsilon(1e-5));
    }
    // ordered and disjoint
    for (std::size_t j = 0; j + 1 < part.size(); ++j)
        CHECK(part.intervals[j].hi < part.intervals[j + 1].lo);
    CHECK(check_partition(sin_weight(7), part).empty());
}

TEST_CASE("detection reproduces a declared exact partition") {
    SignPartition exact;
    for (int j = 0; j < 2; ++j) exact.intervals.push_back({2.0 * j / 3.0, (2.0 * j + 1) / 3.0});
    Weight declared(1.0, [](double x) { return std::sin(3 * num::pi * x); }, exact);
    REQUIRE(declared.partition().has_value());

    PartitionOptions opt;
    auto detected = detect_sign_partition(declared, opt);
    REQUIRE(detected.size() == exact.intervals.size());
    const double slack = 1.0 / opt.grid_n;
    for (std::size_t j = 0; j < detected.size(); ++j) {
        CHECK(std::abs(detected.intervals[j].lo - exact.intervals[j].lo) <= slack);
        CHECK(std::abs(detected.intervals[j].hi - exact.intervals[j].hi) <= slack);
    }
}

TEST_CASE("partition detection is stable under grid doubling") {
    for (int k : {3, 7}) {
        PartitionOptions coarse;  // 2048
        PartitionOptions fine;
        fine.grid_n = 4096;
        auto a = detect_sign_partition(sin_weight(k), coarse);
        auto b = detect_sign_partition(sin_weight(k), fine);
        REQUIRE(a.size() == b.size());
        for (std::size_t j = 0; j < a.size(); ++j) {
            CHECK(std::abs(a.intervals[j].lo - b.intervals[j].lo) <= 1.0 / coarse.grid_n);
            CHECK(std::abs(a.intervals[j].hi - b.intervals[j].hi) <= 1.0 / coarse.grid_n);
        }
    }
}

TEST_CASE("everywhere-negative weight has no nonnegativity interval") {
    Weight neg(1.0, [](double) { return -1.0; });
    CHECK_THROWS_AS(detect_sign_partition(neg), NoNonNegativeRegion);
}

TEST_CASE("positive/negative parts and absolute value agree pointwise") {
    Weight a = sin_weight(3);
    a.set_partition(detect_sign_partition(a));
    Weight ap = positive_part(a);
    Weight an = negative_part(a);
    Weight aa = absolute_value(a);
    for (int i = 0; i <= 100; ++i) {
        const double x = i / 100.0;
        const double v = a(x);
        CHECK(ap(x) == doctest::Approx(std::max(v, 0.0)));
        CHECK(an(x) == doctest::Approx(std::max(-v, 0.0)));
        CHECK(aa(x) == doctest::Approx(std::abs(v)));
        CHECK(ap(x) + an(x) == doctest::Approx(aa(x)));
    }
    // the clipped weights keep sign-change abscissae as kinks
    CHECK(ap.kinks().size() >= 2);
}

TEST_CASE("scaling preserves sign structure and multiplies values") {
    Weight a = sin_weight(3);
    a.set_partition(detect_sign_partition(a));
    Weight b = a.with_scale(2.5);
    CHECK(b.scale() == doctest::Approx(2.5));
    for (int i = 0; i <= 20; ++i) {
        const double x = i / 20.0;
        CHECK(b(x) == doctest::Approx(2.5 * a(x)));
    }
    REQUIRE(b.partition().has_value());
    CHECK(b.partition()->size() == a.partition()->size());
    CHECK(b.kinks() == a.kinks());
}

TEST_CASE("check_partition rejects a shifted partition") {
    Weight a = sin_weight(3);
    SignPartition wrong;
    wrong.intervals = {{0.2, 0.5}};  // straddles the sign change at 1/3
    CHECK_FALSE(check_partition(a, wrong).empty());
}
