#pragma once

// Independent numerical oracles for cross-validation.  Nothing here calls
// the library's eigenvalue or integration code paths.

#include <functional>

#include "posbvp/problem.hpp"

namespace oracles {

// First generalized eigenvalue of the Dirichlet problem phi'' + lambda w phi = 0
// on [alpha, beta] via second-order central differences on n interior points:
// A phi = lambda W phi with A = tridiag(-1, 2, -1)/h^2, W = diag(w).  Power
// iteration on A^{-1} W with Thomas solves; O(h^2) accurate.
double fd_first_eigenvalue(const std::function<double(double)>& w, double alpha,
                           double beta, int n = 4096);

// Classical fixed-step RK4 for u'' + a(x) g~(u) = 0 from (0, c); end state only.
struct Rk4End {
    double u;
    double v;
};
Rk4End rk4_shoot(const posbvp::ProblemSpec& p, double c, double h);

// Plain composite Simpson (n even) for scalar integrands.
double simpson_integral(const std::function<double(double)>& f, double lo, double hi,
                        int n);

// Problems used across the suites, built the same way the bundled configs
// build them (declared classes and descriptors included).
posbvp::ProblemSpec two_hump_problem();   // a = sin(3 pi x), bounded-slope g
posbvp::ProblemSpec four_hump_problem();  // a = sin(7 pi x), oscillating g
posbvp::ProblemSpec cubic_problem();      // a = 1, g = s^3

// Reference eigenvalues: finite-difference values Richardson-extrapolated
// from n = 2048/4096/8192.  Interior kinks of the clipped weights limit the
// extrapolation, so treat these as good to 4-6 significant digits.
namespace ref {
inline constexpr double pi_squared = 9.869604401089358;     // exact pi^2
inline constexpr double lam_pos_two_hump = 34.2587532715;   // lambda((sin 3pi x)+, [0,1])
inline constexpr double lam_i1_two_hump = 104.1402255448;   // lambda((sin 3pi x)+, [0,1/3])
inline constexpr double lam_abs_four_hump = 15.4850519020;  // lambda(|sin 7pi x|, [0,1])
inline constexpr double lam_i1_four_hump = 566.9856724132;  // lambda((sin 7pi x)+, [0,1/7])
inline constexpr double slope_at_infinity_two_hump = 628.3185307179587;  // 200 pi
}  // namespace ref

}  // namespace oracles
