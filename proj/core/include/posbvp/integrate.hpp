#pragma once

#include <limits>
#include <vector>

#include "posbvp/errors.hpp"
#include "posbvp/problem.hpp"
#include "posbvp/profile.hpp"

namespace posbvp {

enum class Outcome { ReachedEnd, Escaped };

// One initial-value sweep of u'' + a(x) g~(u) = 0 (g~ zero on u < 0).
struct Trajectory {
    std::vector<ProfileSample> samples;  // accepted steps plus densification
    Outcome outcome = Outcome::ReachedEnd;
    double escape_x = 0.0;               // where |u|+|u'| crossed the cap
    std::vector<double> zero_crossings;  // downward u-crossings, refined

    double end_u() const { return samples.back().u; }
    double end_v() const { return samples.back().v; }
};

struct IntegrateOptions {
    double tol = 1e-10;  // rtol = atol = tol
    double cap = 1e8;    // escape when |u| + |u'| exceeds this
    // emit interpolated samples so consecutive spacing <= max_dx
    double max_dx = std::numeric_limits<double>::infinity();
};

// Carries whatever was integrated before the step size collapsed
// (below 1e-14 * L).
struct StepSizeUnderflow : Error {
    explicit StepSizeUnderflow(Trajectory t)
        : Error("step size underflow"), partial(std::move(t)) {}
    Trajectory partial;
};

// Integrates from (u0, v0) at x0 to x1 (x0 < x1).  Mesh points land on
// every weight kink in (x0, x1).  Escape is refined by bisection on the
// dense interpolant; on escape the trajectory ends at the crossing.
// Downward zero crossings of u are refined to |u| <= 1e-12.
Trajectory integrate(const ProblemSpec& p, double x0, double u0, double v0, double x1,
                     const IntegrateOptions& opt = {});

}  // namespace posbvp
