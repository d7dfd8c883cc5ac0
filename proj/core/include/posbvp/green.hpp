#pragma once

#include <functional>
#include <span>
#include <vector>

#include "posbvp/problem.hpp"
#include "posbvp/profile.hpp"

namespace posbvp {

// Kernel of the inverse of -d^2/dx^2 with Dirichlet conditions on [0, L]:
// G(x, xi) = min(x, xi) * (L - max(x, xi)) / L.  Symmetric, nonnegative,
// maximum L/4 on the diagonal at x = L/2.
struct GreenKernel {
    double L;
    double operator()(double x, double xi) const;
};

// (Phi u)(x) = integral over [0, L] of G(x, xi) a(xi) g~(u(xi)) d xi,
// by composite Simpson split at xi = x (the kernel has a derivative jump
// on the diagonal).  Fixed points of Phi with u >= 0 are solutions of the
// boundary value problem.
std::vector<double> apply_operator(const ProblemSpec& p,
                                   const std::function<double(double)>& u,
                                   std::span<const double> xs, int quad_n = 1024);

// Same operator evaluated on the profile's own abscissae, reading u by
// Hermite interpolation of the stored (u, u') samples.
std::vector<double> apply_operator(const ProblemSpec& p, const SolutionProfile& u,
                                   int quad_n = 1024);

// max_i |u(x_i) - (Phi u)(x_i)| over the profile grid.
double operator_residual(const ProblemSpec& p, const SolutionProfile& u,
                         int quad_n = 1024);

}  // namespace posbvp
