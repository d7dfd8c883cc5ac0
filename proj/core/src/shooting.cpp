#include "posbvp/shooting.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace posbvp {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

PoincarePoint classify(double c, const Trajectory& t, double L) {
    PoincarePoint pt;
    pt.c = c;
    double sup = 0.0;
    double imin = std::numeric_limits<double>::infinity();
    bool has_interior = false;
    for (const auto& s : t.samples) {
        sup = std::max(sup, std::abs(s.u));
        if (s.x > 0.0 && s.x < L) {
            imin = std::min(imin, s.u);
            has_interior = true;
        }
    }
    pt.sup_norm = sup;
    pt.interior_min = has_interior ? imin : 0.0;
    if (t.outcome == Outcome::Escaped) {
        pt.escaped = true;
        pt.escape_x = t.escape_x;
        pt.end_u = kNaN;
        pt.end_v = kNaN;
        pt.positive_interior = false;
    } else {
        pt.end_u = t.end_u();
        pt.end_v = t.end_v();
        pt.positive_interior = has_interior && imin > 0.0;
    }
    return pt;
}

PoincarePoint shoot(const ProblemSpec& p, double c, const ShootingOptions& opt) {
    const double L = p.weight.length();
    IntegrateOptions io;
    io.tol = opt.tol_ode;
    io.cap = opt.cap;
    io.max_dx = L / opt.verify_n;
    return classify(c, integrate(p, 0.0, 0.0, c, L, io), L);
}

}  // namespace

std::vector<PoincarePoint> sample_poincare(const ProblemSpec& p, std::span<const double> cs,
                                           const ShootingOptions& opt) {
    std::vector<PoincarePoint> out(cs.size());
    const int nthreads = std::max(1, opt.threads);
    if (nthreads == 1 || cs.size() < 8) {
        for (std::size_t i = 0; i < cs.size(); ++i) out[i] = shoot(p, cs[i], opt);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cs.size()) return;
            try {
                out[i] = shoot(p, cs[i], opt);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int k = 0; k < nthreads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

namespace {

bool sign_change(const PoincarePoint& a, const PoincarePoint& b) {
    return !a.escaped && !b.escaped && a.end_u * b.end_u < 0.0;
}

// Bisect u(L; c) on a bracket of non-escaped endpoints.  Shots run at
// tol_ode/10 — the verification tolerance — so the accepted root's stored
// profile reproduces |u(L)| <= tol_bvp exactly as measured here.  If the
// midpoint escapes, re-bracket among 8 subsamples (the escape region has
// entered the bracket); give up after `depth` re-bracketings.
struct BisectOutcome {
    bool found = false;
    double c = 0.0;
    std::string note;
};

BisectOutcome bisect_bracket(const ProblemSpec& p, double lo, double hi,
                             const ShootingOptions& opt, int depth) {
    ShootingOptions fine = opt;
    fine.tol_ode = opt.tol_ode / 10.0;

    const PoincarePoint plo = shoot(p, lo, fine);
    const PoincarePoint phi = shoot(p, hi, fine);
    if (plo.escaped || phi.escaped || plo.end_u * phi.end_u > 0.0) {
        std::ostringstream os;
        os << "bracket [" << lo << ", " << hi
           << "] abandoned: no sign change at verification tolerance";
        return {false, 0.0, os.str()};
    }
    double f_lo = plo.end_u;
    if (std::abs(f_lo) <= 0.5 * opt.tol_bvp && lo > 0.0) return {true, lo, ""};
    if (std::abs(phi.end_u) <= 0.5 * opt.tol_bvp && hi > 0.0) return {true, hi, ""};

    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const PoincarePoint pm = shoot(p, mid, fine);
        if (pm.escaped) {
            if (depth <= 0) {
                std::ostringstream os;
                os << "bracket [" << lo << ", " << hi << "] abandoned: escape at c = " << mid;
                return {false, 0.0, os.str()};
            }
            // subdivide and continue on a non-escaped sign-change subpair
            const int k = 8;
            std::vector<PoincarePoint> sub;
            for (int j = 0; j <= k; ++j) sub.push_back(shoot(p, lo + (hi - lo) * j / k, fine));
            for (int j = 0; j < k; ++j)
                if (sign_change(sub[j], sub[j + 1]))
                    return bisect_bracket(p, sub[j].c, sub[j + 1].c, opt, depth - 1);
            std::ostringstream os;
            os << "bracket [" << lo << ", " << hi
               << "] abandoned: escapes split it with no remaining sign change";
            return {false, 0.0, os.str()};
        }
        if (std::abs(pm.end_u) <= 0.5 * opt.tol_bvp && mid > 0.0) return {true, mid, ""};
        if ((f_lo < 0.0) == (pm.end_u < 0.0)) {
            lo = mid;
            f_lo = pm.end_u;
        } else {
            hi = mid;
        }
    }
    std::ostringstream os;
    os << "bracket [" << lo << ", " << hi << "] abandoned: 200 bisections without |u(L)| <= "
       << 0.5 * opt.tol_bvp;
    return {false, 0.0, os.str()};
}

}  // namespace

SolveResult solve_on_grid(const ProblemSpec& p, std::span<const double> cs,
                          const ShootingOptions& opt) {
    const double L = p.weight.length();
    SolveResult res;
    res.scan = sample_poincare(p, cs, opt);

    // refine the grid near escape boundaries; never bisect across an escape
    for (int round = 0; round < opt.escape_refine_rounds; ++round) {
        std::vector<double> extra;
        for (std::size_t i = 0; i + 1 < res.scan.size(); ++i) {
            const auto& a = res.scan[i];
            const auto& b = res.scan[i + 1];
            if (a.escaped == b.escaped) continue;
            if (b.c - a.c <= 1e-12 * std::max(1.0, std::abs(b.c))) continue;
            for (int j = 1; j <= 7; ++j) extra.push_back(a.c + (b.c - a.c) * j / 8);
        }
        if (extra.empty()) break;
        auto pts = sample_poincare(p, extra, opt);
        res.scan.insert(res.scan.end(), pts.begin(), pts.end());
        std::sort(res.scan.begin(), res.scan.end(),
                  [](const PoincarePoint& x, const PoincarePoint& y) { return x.c < y.c; });
    }

    std::vector<double> roots;
    bool any_bracket = false;
    for (std::size_t i = 0; i + 1 < res.scan.size(); ++i) {
        const auto& a = res.scan[i];
        if (!a.escaped && a.c > 0.0 && std::abs(a.end_u) <= 0.5 * opt.tol_bvp) {
            any_bracket = true;
            ShootingOptions fine = opt;
            fine.tol_ode = opt.tol_ode / 10.0;
            const PoincarePoint af = shoot(p, a.c, fine);
            if (!af.escaped && std::abs(af.end_u) <= 0.5 * opt.tol_bvp) {
                roots.push_back(a.c);  // grid sample already a root
            } else {
                // only a root at scan tolerance; settle it on the neighbors
                const double blo = i > 0 ? res.scan[i - 1].c : a.c;
                const double bhi = res.scan[i + 1].c;
                auto out = bisect_bracket(p, blo, bhi, opt, 3);
                if (out.found)
                    roots.push_back(out.c);
                else
                    res.notes.push_back(out.note);
            }
            continue;
        }
        const auto& b = res.scan[i + 1];
        if (!sign_change(a, b)) continue;
        any_bracket = true;
        auto out = bisect_bracket(p, a.c, b.c, opt, 3);
        if (out.found)
            roots.push_back(out.c);
        else
            res.notes.push_back(out.note);
    }
    if (!any_bracket)
        throw NoBracketFound("no sign change of u(L; c) among non-escaped samples",
                             std::move(res.scan));

    std::sort(roots.begin(), roots.end());
    const double c_span = cs.empty() ? 1.0 : std::max(1e-30, cs.back() - cs.front());
    std::vector<double> unique_roots;
    for (double c : roots)
        if (unique_roots.empty() || c - unique_roots.back() > 1e-10 * c_span)
            unique_roots.push_back(c);

    for (double c : unique_roots) {
        IntegrateOptions io;
        io.tol = opt.tol_ode / 10.0;
        io.cap = opt.cap;
        io.max_dx = L / opt.verify_n;
        Trajectory t = integrate(p, 0.0, 0.0, c, L, io);
        if (t.outcome == Outcome::Escaped) {
            std::ostringstream os;
            os << "root c = " << c << " escaped on re-integration; dropped";
            res.notes.push_back(os.str());
            continue;
        }
        SolutionProfile prof;
        prof.samples = std::move(t.samples);
        prof.initial_slope = c;
        prof.boundary_residual = std::abs(prof.samples.back().u);
        double sup = 0.0;
        double imin = std::numeric_limits<double>::infinity();
        for (const auto& s : prof.samples) {
            sup = std::max(sup, std::abs(s.u));
            if (s.x > 0.0 && s.x < L) imin = std::min(imin, s.u);
        }
        prof.sup_norm = sup;
        prof.interior_min = imin;
        if (!(imin > 0.0)) {
            std::ostringstream os;
            os << "root c = " << c << " rejected: interior minimum " << imin << " <= 0";
            res.notes.push_back(os.str());
            continue;
        }
        if (prof.boundary_residual > opt.tol_bvp) {
            std::ostringstream os;
            os << "root c = " << c << " rejected: |u(L)| = " << prof.boundary_residual
               << " > tol_bvp after re-integration";
            res.notes.push_back(os.str());
            continue;
        }
        res.solutions.push_back(std::move(prof));
    }
    return res;
}

SolveResult find_positive_solutions(const ProblemSpec& p, const ShootingOptions& opt) {
    if (!(0.0 <= opt.c_min && opt.c_min < opt.c_max) || opt.n_scan < 2)
        throw std::invalid_argument("find_positive_solutions: need 0 <= c_min < c_max, n >= 2");
    std::vector<double> cs(opt.n_scan);
    for (int i = 0; i < opt.n_scan; ++i)
        cs[i] = opt.c_min + (opt.c_max - opt.c_min) * i / (opt.n_scan - 1);
    return solve_on_grid(p, cs, opt);
}

SmallAmplitudeResult small_amplitude_scan(const ProblemSpec& p, double r_small,
                                          std::span<const double> cs,
                                          const ShootingOptions& opt) {
    if (!(r_small > 0.0))
        throw std::invalid_argument("small_amplitude_scan: r_small must be positive");
    SmallAmplitudeResult out;
    try {
        SolveResult sr = solve_on_grid(p, cs, opt);
        for (const auto& sol : sr.solutions)
            if (sol.sup_norm <= r_small) {
                out.no_small_solutions = false;
                out.offending_c.push_back(sol.initial_slope);
            }
        for (const auto& pt : sr.scan) out.max_sup_norm = std::max(out.max_sup_norm, pt.sup_norm);
    } catch (const NoBracketFound& e) {
        for (const auto& pt : e.scan) out.max_sup_norm = std::max(out.max_sup_norm, pt.sup_norm);
    }
    return out;
}

}  // namespace posbvp
