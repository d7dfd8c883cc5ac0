#include "posbvp/nonlinearity.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "posbvp/errors.hpp"

namespace posbvp {

Nonlinearity::Nonlinearity(std::function<double(double)> eval, std::string name)
    : eval_(std::move(eval)), name_(std::move(name)) {
    const double g0 = eval_(0.0);
    if (!(std::abs(g0) <= 1e-14))
        throw std::invalid_argument("nonlinearity: g(0) must be 0, got " + std::to_string(g0));
}

NearZeroScan classify_near_zero(const Nonlinearity& g, double delta, int grid_n) {
    if (!(delta > 0.0)) throw std::invalid_argument("classify_near_zero: delta must be positive");
    if (grid_n < 8) throw std::invalid_argument("classify_near_zero: grid_n must be >= 8");

    const double nan = std::numeric_limits<double>::quiet_NaN();
    NearZeroScan scan{NearZeroClass::NonNegative, nan, nan};
    // log grid over (delta * 1e-6, delta]
    for (int j = 0; j < grid_n; ++j) {
        const double s = delta * std::pow(10.0, -6.0 * j / grid_n);
        const double v = g(s);
        if (v > 0.0 && std::isnan(scan.positive_witness)) scan.positive_witness = s;
        if (v < 0.0 && std::isnan(scan.negative_witness)) scan.negative_witness = s;
    }
    const bool pos = !std::isnan(scan.positive_witness);
    const bool neg = !std::isnan(scan.negative_witness);
    if (pos && neg)
        scan.cls = NearZeroClass::SignChanging;
    else if (pos)
        scan.cls = NearZeroClass::NonNegative;
    else if (neg)
        scan.cls = NearZeroClass::NonPositive;
    else
        throw InconclusiveClassification(
            "g vanishes at every near-zero sample; declare the class explicitly");
    return scan;
}

AsymptoticDescriptors estimate_asymptotics(const Nonlinearity& g, double delta,
                                           double s_max, int grid_n) {
    if (!(delta > 0.0) || !(s_max > delta))
        throw std::invalid_argument("estimate_asymptotics: need 0 < delta < s_max");

    AsymptoticDescriptors d;
    d.source = DescriptorSource::GridEstimated;

    // near zero: inf/sup of g(s)/s over the smallest sampled decade
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    const double s0 = delta * 1e-6, s1 = delta * 1e-5;
    for (int j = 0; j <= grid_n; ++j) {
        const double s = s0 + (s1 - s0) * j / grid_n;
        const double q = g(s) / s;
        lo = std::min(lo, q);
        hi = std::max(hi, q);
    }
    d.g0_inf = lo;
    d.g0_sup = hi;

    // toward infinity: liminf estimated as the min over the largest decade
    double inf_q = std::numeric_limits<double>::infinity();
    const double t0 = s_max / 1e3;
    for (int j = 0; j <= grid_n; ++j) {
        const double s = t0 * std::pow(s_max / t0, static_cast<double>(j) / grid_n);
        inf_q = std::min(inf_q, g(s) / s);
    }
    d.g_infty = inf_q;
    return d;
}

double default_delta(const Nonlinearity& g) {
    const int n = 512;
    const double s_lo = 1e-6, s_hi = 1e2;
    double gmax = 0.0;
    std::vector<double> ss(n + 1), gs(n + 1);
    for (int j = 0; j <= n; ++j) {
        ss[j] = s_lo * std::pow(s_hi / s_lo, static_cast<double>(j) / n);
        gs[j] = std::abs(g(ss[j]));
        gmax = std::max(gmax, gs[j]);
    }
    if (gmax == 0.0) return 1.0;
    for (int j = 0; j <= n; ++j)
        if (gs[j] > 1e-3 * gmax) return std::min(1.0, ss[j]);
    return 1.0;
}

}  // namespace posbvp
