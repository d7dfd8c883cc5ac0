#include "posbvp/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "posbvp/ode.hpp"

namespace posbvp {

namespace {

struct BvpRhs {
    const Weight& a;
    const Nonlinearity& g;
    void operator()(double x, const detail::State<2>& y, detail::State<2>& dy) const {
        dy[0] = y[1];
        dy[1] = -a(x) * g.extended(y[0]);
    }
};

double phase_norm(const detail::State<2>& y) { return std::abs(y[0]) + std::abs(y[1]); }

}  // namespace

Trajectory integrate(const ProblemSpec& p, double x0, double u0, double v0, double x1,
                     const IntegrateOptions& opt) {
    if (!(x0 < x1)) throw std::invalid_argument("integrate: need x0 < x1");
    const double L = p.weight.length();

    detail::OdeControl ctl;
    ctl.rtol = ctl.atol = opt.tol;
    ctl.underflow_floor = 1e-14 * L;
    for (double k : p.weight.kinks())
        if (k > x0 && k < x1) ctl.forced.push_back(k);

    Trajectory out;
    out.samples.push_back({x0, u0, v0});
    if (std::abs(u0) + std::abs(v0) > opt.cap) {
        out.outcome = Outcome::Escaped;
        out.escape_x = x0;
        return out;
    }

    auto observe = [&](double xa, double xb, const detail::State<2>& ya,
                       const detail::State<2>& yb, const detail::DenseStep<2>& seg) {
        double xb_eff = xb;
        detail::State<2> yb_eff = yb;
        bool escaped = false;

        if (phase_norm(yb) > opt.cap && phase_norm(ya) <= opt.cap) {
            // refine the cap crossing on the interpolant
            double lo = xa, hi = xb;
            while (hi - lo > 1e-12 * L) {
                const double mid = 0.5 * (lo + hi);
                (phase_norm(seg.eval(mid)) > opt.cap ? hi : lo) = mid;
            }
            xb_eff = hi;
            yb_eff = seg.eval(hi);
            escaped = true;
        }

        const double ua = ya[0], ub = yb_eff[0];
        if (ua > 0.0 && ub <= 0.0) {
            double lo = xa, hi = xb_eff, mid = xb_eff;
            for (int it = 0; it < 200; ++it) {
                mid = 0.5 * (lo + hi);
                const double um = seg.eval(mid)[0];
                if (std::abs(um) <= 1e-12) break;
                (um > 0.0 ? lo : hi) = mid;
            }
            out.zero_crossings.push_back(mid);
        }

        if (xb_eff - xa > opt.max_dx) {
            const int extra = static_cast<int>(std::ceil((xb_eff - xa) / opt.max_dx)) - 1;
            for (int k = 1; k <= extra; ++k) {
                const double x = xa + (xb_eff - xa) * k / (extra + 1);
                const auto y = seg.eval(x);
                out.samples.push_back({x, y[0], y[1]});
            }
        }
        out.samples.push_back({xb_eff, yb_eff[0], yb_eff[1]});

        if (escaped) {
            out.outcome = Outcome::Escaped;
            out.escape_x = xb_eff;
            return false;
        }
        return true;
    };

    const auto status = detail::dopri5_sweep<2>(BvpRhs{p.weight, p.g}, x0, {u0, v0}, x1,
                                                ctl, observe);
    if (status == detail::SweepStatus::StepUnderflow) throw StepSizeUnderflow(std::move(out));
    return out;
}

}  // namespace posbvp
