#pragma once

#include <vector>

#include "posbvp/profile.hpp"
#include "posbvp/weight.hpp"

namespace posbvp {

enum class WeightKind { PositivePart, NegativePart, AbsoluteValue };

struct EigenResult {
    double lambda = 0.0;
    Interval interval;
    WeightKind kind = WeightKind::PositivePart;
    double residual = 0.0;      // |theta(beta; lambda) - pi|
    double bracket_lo = 0.0;    // final bisection bracket
    double bracket_hi = 0.0;
    int bisections = 0;         // iterations taken to shrink the bracket
    // Best endpoint defect per bisection iteration; non-increasing.
    std::vector<double> residual_history;
};

struct EigenOptions {
    double tol = 1e-8;       // relative bracket width at exit
    double ode_tol = 1e-12;  // rotation-angle integration tolerance
    int grid_n = 512;        // probe grid for sign/vanishing checks
    double overflow = 1e16;  // BracketOverflow guard
};

// First eigenvalue of phi'' + lambda w phi = 0, phi(alpha) = phi(beta) = 0,
// where w is the selected part of `a` on [alpha, beta].  Uses the rotation
// angle theta of the phase vector: theta' = cos^2(theta) + lambda w sin^2(theta),
// theta(alpha) = 0; lambda_1 is the unique root of theta(beta; lambda) = pi,
// and theta(beta; .) is nondecreasing in lambda.  Bracket by doubling from
// lambda = 1, then bisect.  Throws WeightVanishes when w is ~0 on the
// probe grid and BracketOverflow past `overflow`.
EigenResult first_eigenvalue(const Weight& a, Interval iv, WeightKind kind,
                             const EigenOptions& opt = {});

// Normalized eigenfunction (max = 1) recovered by integrating
// (phi, phi') from (0, 1) at the computed lambda, then rescaling.
SolutionProfile eigenfunction(const Weight& a, const EigenResult& r,
                              int n_samples = 513, const EigenOptions& opt = {});

}  // namespace posbvp
