#pragma once

#include <optional>
#include <vector>

namespace posbvp {

struct ProfileSample {
    double x;
    double u;
    double v;  // u'
};

// A solution candidate stored as (x, u, u') samples.  Between samples the
// profile evaluates by cubic Hermite interpolation, which matches the
// integrator's dense-output order on the sample spacings used here.
struct SolutionProfile {
    std::vector<ProfileSample> samples;
    double initial_slope = 0.0;      // u'(x_first)
    double boundary_residual = 0.0;  // |u(x_last)|
    double interior_min = 0.0;       // min of u over interior samples
    double sup_norm = 0.0;
    std::optional<double> operator_residual;

    double x_begin() const { return samples.front().x; }
    double x_end() const { return samples.back().x; }

    double value(double x) const;
    double derivative(double x) const;
};

}  // namespace posbvp
