#pragma once

#include <span>
#include <string>
#include <vector>

#include "posbvp/errors.hpp"
#include "posbvp/integrate.hpp"
#include "posbvp/problem.hpp"
#include "posbvp/profile.hpp"

namespace posbvp {

// One shot u(.; c) with u(0) = 0, u'(0) = c.
struct PoincarePoint {
    double c = 0.0;
    bool escaped = false;
    double escape_x = 0.0;    // valid when escaped
    double end_u = 0.0;       // u(L), NaN when escaped
    double end_v = 0.0;       // u'(L), NaN when escaped
    double interior_min = 0.0;
    double sup_norm = 0.0;    // max |u| along the (possibly partial) sweep
    bool positive_interior = false;
};

struct ShootingOptions {
    double c_min = 0.0;
    double c_max = 12.0;
    int n_scan = 481;
    double tol_bvp = 1e-9;   // |u(L)| acceptance threshold
    double tol_ode = 1e-10;
    double cap = 1e8;
    int threads = 1;
    int escape_refine_rounds = 3;  // grid refinement near escaped samples
    int verify_n = 1024;           // interior-positivity sample density
};

// Shots at each c in the grid, in order.  Never bisects; pure sampling.
std::vector<PoincarePoint> sample_poincare(const ProblemSpec& p,
                                           std::span<const double> cs,
                                           const ShootingOptions& opt = {});

struct SolveResult {
    std::vector<SolutionProfile> solutions;   // accepted, re-integrated at tol/10
    std::vector<PoincarePoint> scan;          // all sampled shots, sorted by c
    std::vector<std::string> notes;           // dropped brackets etc.
};

// No sign change of u(L; c) among adjacent non-escaped samples.  Carries
// the scan so callers can report it and widen the range.
struct NoBracketFound : Error {
    NoBracketFound(std::string what, std::vector<PoincarePoint> s)
        : Error(std::move(what)), scan(std::move(s)) {}
    std::vector<PoincarePoint> scan;
};

// Scan -> bracket -> bisect -> verify.  Brackets come from sign changes of
// u(L; c) between adjacent non-escaped samples; around escapes the grid is
// refined instead of bisected across.  A root is accepted only if the
// re-integrated trajectory is strictly positive on the interior grid.
SolveResult find_positive_solutions(const ProblemSpec& p, const ShootingOptions& opt = {});

// Same machinery on an explicit c-grid (used for small-slope sweeps).
SolveResult solve_on_grid(const ProblemSpec& p, std::span<const double> cs,
                          const ShootingOptions& opt);

struct SmallAmplitudeResult {
    bool no_small_solutions = true;  // nothing accepted with sup-norm <= r_small
    double max_sup_norm = 0.0;       // over all scan trajectories
    std::vector<double> offending_c;
};

// Verifies the absence of positive solutions of amplitude <= r_small along
// a grid of small initial slopes.
SmallAmplitudeResult small_amplitude_scan(const ProblemSpec& p, double r_small,
                                          std::span<const double> cs,
                                          const ShootingOptions& opt = {});

}  // namespace posbvp
