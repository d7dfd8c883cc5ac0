#include "posbvp/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace posbvp {

double radius_to_abscissa(double r, int dimension, double r1) {
    if (dimension < 2) throw std::invalid_argument("radial map: dimension must be >= 2");
    if (!(r1 > 0.0) || r < r1 * (1.0 - 1e-12))
        throw std::invalid_argument("radial map: need 0 < r1 <= r");
    if (dimension == 2) return std::log(r / r1);
    const double q = 2.0 - dimension;  // exponent of the antiderivative
    return (std::pow(r1, q) - std::pow(r, q)) / (dimension - 2);
}

double abscissa_to_radius(double t, int dimension, double r1) {
    if (dimension < 2) throw std::invalid_argument("radial map: dimension must be >= 2");
    if (!(r1 > 0.0) || t < -1e-15) throw std::invalid_argument("radial map: need t >= 0");
    if (dimension == 2) return r1 * std::exp(t);
    const double q = 2.0 - dimension;
    const double base = std::pow(r1, q) - (dimension - 2) * t;
    if (!(base > 0.0))
        throw std::invalid_argument("radial map: abscissa beyond the map's range");
    return std::pow(base, 1.0 / q);
}

TransformedProblem reduce(const RadialProblem& rp) {
    if (!(0.0 < rp.r1 && rp.r1 < rp.r2))
        throw std::invalid_argument("reduce: need 0 < r1 < r2");
    if (rp.dimension < 2) throw std::invalid_argument("reduce: dimension must be >= 2");

    const int N = rp.dimension;
    const double r1 = rp.r1;
    const double L = radius_to_abscissa(rp.r2, N, r1);

    auto a_radial = rp.weight;
    auto base = [a_radial, N, r1](double t) {
        const double r = abscissa_to_radius(t, N, r1);
        return std::pow(r, 2.0 * (N - 1)) * a_radial(r);
    };

    std::optional<SignPartition> part;
    if (rp.partition) {
        SignPartition mapped;
        mapped.tolerance = rp.partition->tolerance;
        for (const Interval& iv : rp.partition->intervals) {
            const double lo = std::clamp(iv.lo, r1, rp.r2);
            const double hi = std::clamp(iv.hi, r1, rp.r2);
            mapped.intervals.push_back(
                {radius_to_abscissa(lo, N, r1), radius_to_abscissa(hi, N, r1)});
        }
        part = std::move(mapped);
    }

    Weight w(L, std::move(base), std::move(part));
    return TransformedProblem{L, ProblemSpec{std::move(w), rp.g, rp.name}, N, r1, rp.r2};
}

RadialSolveResult solve_radial(const RadialProblem& rp, const ShootingOptions& sopt,
                               const CheckOptions& copt, int n_radial_samples) {
    if (n_radial_samples < 2)
        throw std::invalid_argument("solve_radial: n_radial_samples must be >= 2");

    TransformedProblem tp = reduce(rp);
    HypothesisReport rep = check_all(tp.line, copt);
    RadialSolveResult res{std::move(tp), std::move(rep), {}, {}, {}};
    if (res.hypotheses.overall == Verdict::Fail) {
        res.notes.push_back("hypotheses fail on the transformed problem; shooting skipped");
        return res;
    }

    SolveResult sr = find_positive_solutions(res.transformed.line, sopt);
    res.scan = std::move(sr.scan);
    res.notes.insert(res.notes.end(), sr.notes.begin(), sr.notes.end());

    const int N = res.transformed.dimension;
    const double r1 = res.transformed.r1, r2 = res.transformed.r2;
    for (auto& v : sr.solutions) {
        RadialSolution rs;
        const double t_max = v.x_end();
        for (int j = 0; j < n_radial_samples; ++j) {
            const double r = r1 + (r2 - r1) * j / (n_radial_samples - 1);
            const double t = std::clamp(radius_to_abscissa(r, N, r1), 0.0, t_max);
            rs.samples.push_back({r, v.value(t), v.derivative(t) * std::pow(r, 1.0 - N)});
        }
        rs.boundary_residual = v.boundary_residual;
        double sup = 0.0, imin = std::numeric_limits<double>::infinity();
        for (const auto& s : rs.samples) {
            sup = std::max(sup, std::abs(s.w));
            if (s.r > r1 && s.r < r2) imin = std::min(imin, s.w);
        }
        rs.sup_norm = sup;
        rs.interior_min = imin;
        rs.line = std::move(v);
        res.solutions.push_back(std::move(rs));
    }
    return res;
}

}  // namespace posbvp
