#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "posbvp/hypotheses.hpp"
#include "posbvp/problem.hpp"
#include "posbvp/profile.hpp"
#include "posbvp/shooting.hpp"

namespace posbvp {

// Radial Dirichlet problem on an annulus R1 < |p| < R2 in dimension N >= 2:
// w'' + (N-1)/r w' + a(r) g(w) = 0, w(R1) = w(R2) = 0.
struct RadialProblem {
    int dimension = 3;
    double r1 = 1.0;
    double r2 = 2.0;
    std::function<double(double)> weight;  // continuous a(r)
    Nonlinearity g;
    std::optional<SignPartition> partition;  // in r, optional
    std::string name;
};

// t = integral from r1 to r of s^(1-N) ds maps [R1, R2] to [0, L] and turns
// the radial equation into v'' + r(t)^(2(N-1)) a(r(t)) g(v) = 0.
double radius_to_abscissa(double r, int dimension, double r1);
double abscissa_to_radius(double t, int dimension, double r1);

struct TransformedProblem {
    double length = 0.0;
    ProblemSpec line;  // the 1-D problem on [0, length]
    int dimension = 3;
    double r1 = 1.0;
    double r2 = 2.0;

    double radius_of(double t) const { return abscissa_to_radius(t, dimension, r1); }
    double abscissa_of(double r) const { return radius_to_abscissa(r, dimension, r1); }
};

TransformedProblem reduce(const RadialProblem& rp);

struct RadialSample {
    double r;
    double w;
    double dw;  // dw/dr
};

struct RadialSolution {
    SolutionProfile line;                // v(t) on [0, L]
    std::vector<RadialSample> samples;   // w(r) on a uniform r-grid
    double boundary_residual = 0.0;      // |w(R2)|
    double interior_min = 0.0;
    double sup_norm = 0.0;
};

struct RadialSolveResult {
    TransformedProblem transformed;
    HypothesisReport hypotheses;
    std::vector<RadialSolution> solutions;  // empty when hypotheses fail
    std::vector<PoincarePoint> scan;
    std::vector<std::string> notes;
};

// reduce -> check hypotheses on the line problem -> shoot -> map back via
// w(r) = v(h(r)), w'(r) = v'(h(r)) r^(1-N).  When the hypothesis verdict
// fails, no shooting is attempted.
RadialSolveResult solve_radial(const RadialProblem& rp, const ShootingOptions& sopt = {},
                               const CheckOptions& copt = {}, int n_radial_samples = 1025);

}  // namespace posbvp
