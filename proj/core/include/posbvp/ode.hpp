#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

namespace posbvp::detail {

// Dormand-Prince 5(4) with FSAL, mixed absolute/relative error control and
// a quartic dense-output interpolant.  Header-only and templated on the
// right-hand side so hot loops avoid type erasure.
//
// The observer is called once per accepted step with the step interval and
// an interpolant valid on it; returning false stops the sweep.

template <std::size_t N>
using State = std::array<double, N>;

template <std::size_t N>
struct DenseStep {
    double x0 = 0.0;
    double h = 0.0;
    State<N> r1{}, r2{}, r3{}, r4{}, r5{};

    State<N> eval(double x) const {
        const double t = (x - x0) / h;
        const double s = 1.0 - t;
        State<N> y;
        for (std::size_t i = 0; i < N; ++i)
            y[i] = r1[i] + t * (r2[i] + s * (r3[i] + t * (r4[i] + s * r5[i])));
        return y;
    }
};

struct OdeControl {
    double rtol = 1e-10;
    double atol = 1e-10;
    double underflow_floor = 0.0;  // throw-by-caller sentinel: step() reports instead
    std::vector<double> forced;    // strictly increasing interior mesh points
};

// Result of a sweep: where it stopped and why.
enum class SweepStatus { ReachedEnd, StoppedByObserver, StepUnderflow };

template <std::size_t N, typename Rhs, typename Observer>
SweepStatus dopri5_sweep(Rhs&& f, double x0, State<N> y0, double x1,
                         const OdeControl& ctl, Observer&& observe) {
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    // b - bhat (5th minus embedded 4th order weights)
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
    // dense-output weights (Hairer, Norsett, Wanner)
    static constexpr double d1 = -12715105075.0 / 11282082432.0,
                            d3 = 87487479700.0 / 32700410799.0,
                            d4 = -10690763975.0 / 1880347072.0,
                            d5 = 701980252875.0 / 199316789632.0,
                            d6 = -1453857185.0 / 822651844.0,
                            d7 = 69997945.0 / 29380423.0;

    const double span = x1 - x0;
    State<N> k1, k2, k3, k4, k5, k6, k7, y1, yt;
    f(x0, y0, k1);

    // initial step from the ratio of state to slope scale, clipped to span/10
    double h;
    {
        double dn = 0.0, fn = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double sk = ctl.atol + ctl.rtol * std::abs(y0[i]);
            dn += (y0[i] / sk) * (y0[i] / sk);
            fn += (k1[i] / sk) * (k1[i] / sk);
        }
        h = (dn > 0 && fn > 0) ? 0.01 * std::sqrt(dn / fn) : span * 1e-4;
        h = std::min(h, span / 10.0);
        h = std::max(h, span * 1e-10);
    }

    std::size_t next_forced = 0;
    double x = x0;
    bool rejected = false;

    while (x < x1) {
        // land exactly on the next forced point / the right endpoint
        double target = x1;
        while (next_forced < ctl.forced.size() && ctl.forced[next_forced] <= x)
            ++next_forced;
        if (next_forced < ctl.forced.size() && ctl.forced[next_forced] < x1)
            target = ctl.forced[next_forced];
        bool hit = false;
        if (x + h >= target - 1e-14 * span) {
            h = target - x;
            hit = true;
        }
        if (h < ctl.underflow_floor) return SweepStatus::StepUnderflow;

        auto stage = [&](double ci, const State<N>& yi, State<N>& ki) {
            f(x + ci * h, yi, ki);
        };
        for (std::size_t i = 0; i < N; ++i) yt[i] = y0[i] + h * a21 * k1[i];
        stage(c2, yt, k2);
        for (std::size_t i = 0; i < N; ++i) yt[i] = y0[i] + h * (a31 * k1[i] + a32 * k2[i]);
        stage(c3, yt, k3);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y0[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        stage(c4, yt, k4);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y0[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        stage(c5, yt, k5);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y0[i] +
                    h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        stage(1.0, yt, k6);
        for (std::size_t i = 0; i < N; ++i)
            y1[i] = y0[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        stage(1.0, y1, k7);  // FSAL

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double sk =
                ctl.atol + ctl.rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                   e6 * k6[i] + e7 * k7[i]);
            err += (ei / sk) * (ei / sk);
        }
        err = std::sqrt(err / N);

        if (err <= 1.0 || !std::isfinite(err)) {
            if (!std::isfinite(err)) {
                // state blew past double range mid-step; shrink hard and retry
                h *= 0.1;
                rejected = true;
                if (h < ctl.underflow_floor) return SweepStatus::StepUnderflow;
                continue;
            }
            DenseStep<N> seg;
            seg.x0 = x;
            seg.h = h;
            for (std::size_t i = 0; i < N; ++i) {
                const double dy = y1[i] - y0[i];
                seg.r1[i] = y0[i];
                seg.r2[i] = dy;
                seg.r3[i] = h * k1[i] - dy;
                seg.r4[i] = dy - h * k7[i] - seg.r3[i];
                seg.r5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                                 d6 * k6[i] + d7 * k7[i]);
            }
            const double x_new = hit ? target : x + h;
            if (!observe(x, x_new, y0, y1, seg)) return SweepStatus::StoppedByObserver;
            x = x_new;
            y0 = y1;
            k1 = k7;

            double fac = 0.9 * std::pow(err > 1e-30 ? err : 1e-30, -0.2);
            fac = std::min(rejected ? 1.0 : 5.0, std::max(0.2, fac));
            h *= fac;
            rejected = false;
        } else {
            h *= std::min(1.0, std::max(0.2, 0.9 * std::pow(err, -0.2)));
            rejected = true;
        }
    }
    return SweepStatus::ReachedEnd;
}

}  // namespace posbvp::detail
