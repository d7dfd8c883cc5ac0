#include "posbvp/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "posbvp/errors.hpp"
#include "posbvp/ode.hpp"

namespace posbvp {

namespace {

std::function<double(double)> select_part(const Weight& a, WeightKind kind) {
    switch (kind) {
        case WeightKind::PositivePart:
            return [&a](double x) { return std::max(a(x), 0.0); };
        case WeightKind::NegativePart:
            return [&a](double x) { return std::max(-a(x), 0.0); };
        case WeightKind::AbsoluteValue:
            return [&a](double x) { return std::abs(a(x)); };
    }
    throw std::logic_error("select_part: bad kind");
}

struct AngleRhs {
    const std::function<double(double)>& w;
    double lambda;
    void operator()(double x, const detail::State<1>& y, detail::State<1>& dy) const {
        const double s = std::sin(y[0]);
        const double c = std::cos(y[0]);
        dy[0] = c * c + lambda * w(x) * s * s;
    }
};

}  // namespace

EigenResult first_eigenvalue(const Weight& a, Interval iv, WeightKind kind,
                             const EigenOptions& opt) {
    if (iv.lo < -1e-12 || iv.hi > a.length() + 1e-12 || !(iv.length() > 0.0))
        throw std::invalid_argument("first_eigenvalue: interval outside [0, L] or empty");

    const auto w = select_part(a, kind);

    double wmax = 0.0;
    for (int j = 0; j <= opt.grid_n; ++j)
        wmax = std::max(wmax, w(iv.lo + iv.length() * j / opt.grid_n));
    if (wmax <= 1e-12 * a.scale())
        throw WeightVanishes("selected weight part is ~0 on the probe grid");

    detail::OdeControl ctl;
    ctl.rtol = ctl.atol = opt.ode_tol;
    for (double k : a.kinks())
        if (k > iv.lo && k < iv.hi) ctl.forced.push_back(k);

    // terminal rotation angle; nondecreasing in lambda
    auto theta_end = [&](double lambda) {
        detail::State<1> last{0.0};
        auto obs = [&](double, double, const detail::State<1>&, const detail::State<1>& yb,
                       const detail::DenseStep<1>&) {
            last = yb;
            return true;
        };
        detail::dopri5_sweep<1>(AngleRhs{w, lambda}, iv.lo, {0.0}, iv.hi, ctl, obs);
        return last[0];
    };

    constexpr double pi = std::numbers::pi;
    double lo = 0.0, hi = 1.0;
    double theta_hi = theta_end(hi);
    while (theta_hi < pi) {
        lo = hi;
        hi *= 2.0;
        if (hi > opt.overflow)
            throw BracketOverflow("rotation angle still below pi at lambda = " +
                                  std::to_string(hi));
        theta_hi = theta_end(hi);
    }
    const double theta_lo = (lo == 0.0) ? std::atan(iv.length()) : theta_end(lo);

    EigenResult res;
    res.interval = iv;
    res.kind = kind;
    double best = std::min(std::abs(theta_lo - pi), std::abs(theta_hi - pi));
    res.residual_history.push_back(best);
    while (hi - lo > opt.tol * hi) {
        const double mid = 0.5 * (lo + hi);
        const double tm = theta_end(mid);
        (tm < pi ? lo : hi) = mid;
        best = std::min(best, std::abs(tm - pi));
        res.residual_history.push_back(best);
    }
    res.lambda = 0.5 * (lo + hi);
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    res.bisections = static_cast<int>(res.residual_history.size());
    res.residual = std::abs(theta_end(res.lambda) - pi);
    return res;
}

SolutionProfile eigenfunction(const Weight& a, const EigenResult& r, int n_samples,
                              const EigenOptions& opt) {
    if (n_samples < 2) throw std::invalid_argument("eigenfunction: n_samples must be >= 2");
    const auto w = select_part(a, r.kind);
    const Interval iv = r.interval;

    detail::OdeControl ctl;
    ctl.rtol = ctl.atol = opt.ode_tol;
    for (double k : a.kinks())
        if (k > iv.lo && k < iv.hi) ctl.forced.push_back(k);

    struct PhiRhs {
        const std::function<double(double)>& w;
        double lambda;
        void operator()(double x, const detail::State<2>& y, detail::State<2>& dy) const {
            dy[0] = y[1];
            dy[1] = -lambda * w(x) * y[0];
        }
    };

    SolutionProfile prof;
    prof.samples.push_back({iv.lo, 0.0, 1.0});
    const double max_dx = iv.length() / (n_samples - 1);
    auto obs = [&](double xa, double xb, const detail::State<2>&, const detail::State<2>& yb,
                   const detail::DenseStep<2>& seg) {
        if (xb - xa > max_dx) {
            const int extra = static_cast<int>(std::ceil((xb - xa) / max_dx)) - 1;
            for (int k = 1; k <= extra; ++k) {
                const double x = xa + (xb - xa) * k / (extra + 1);
                const auto y = seg.eval(x);
                prof.samples.push_back({x, y[0], y[1]});
            }
        }
        prof.samples.push_back({xb, yb[0], yb[1]});
        return true;
    };
    detail::dopri5_sweep<2>(PhiRhs{w, r.lambda}, iv.lo, {0.0, 1.0}, iv.hi, ctl, obs);

    double peak = 0.0;
    for (const auto& s : prof.samples) peak = std::max(peak, std::abs(s.u));
    if (peak == 0.0) peak = 1.0;
    for (auto& s : prof.samples) {
        s.u /= peak;
        s.v /= peak;
    }
    prof.initial_slope = prof.samples.front().v;
    prof.boundary_residual = std::abs(prof.samples.back().u);
    prof.sup_norm = 1.0;
    double imin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < prof.samples.size(); ++i)
        imin = std::min(imin, prof.samples[i].u);
    prof.interior_min = imin;
    return prof;
}

}  // namespace posbvp
