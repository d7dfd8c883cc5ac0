#include "posbvp/weight.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "posbvp/errors.hpp"

namespace posbvp {

namespace {

void insert_sorted_unique(std::vector<double>& xs, double x, double ulp_tol) {
    auto it = std::lower_bound(xs.begin(), xs.end(), x);
    if (it != xs.end() && std::abs(*it - x) <= ulp_tol) return;
    if (it != xs.begin() && std::abs(*(it - 1) - x) <= ulp_tol) return;
    xs.insert(it, x);
}

}  // namespace

Weight::Weight(double length, std::function<double(double)> base,
               std::optional<SignPartition> partition, double scale)
    : length_(length), base_(std::move(base)), scale_(scale) {
    if (!(length_ > 0.0)) throw std::invalid_argument("weight: length must be positive");
    if (!(scale_ > 0.0)) throw std::invalid_argument("weight: scale must be positive");
    if (partition) set_partition(std::move(*partition));
}

void Weight::set_partition(SignPartition p) {
    double prev = 0.0;
    for (const auto& iv : p.intervals) {
        if (iv.lo < prev - 1e-12 || iv.hi < iv.lo || iv.hi > length_ + 1e-12)
            throw std::invalid_argument("weight: partition intervals must be ordered and within [0, L]");
        prev = iv.hi;
    }
    partition_ = std::move(p);
    std::vector<double> ks;
    for (const auto& iv : partition_->intervals) {
        ks.push_back(iv.lo);
        ks.push_back(iv.hi);
    }
    add_kinks(ks);
}

void Weight::add_kinks(const std::vector<double>& xs) {
    const double tol = 1e-14 * length_;
    for (double x : xs)
        if (x > tol && x < length_ - tol) insert_sorted_unique(kinks_, x, tol);
}

Weight Weight::with_scale(double scale) const {
    Weight w = *this;
    if (!(scale > 0.0)) throw std::invalid_argument("weight: scale must be positive");
    w.scale_ = scale;
    return w;
}

namespace {

Weight derived_weight(const Weight& a, std::function<double(double)> base) {
    Weight w(a.length(), std::move(base));
    w.add_kinks(a.kinks());
    return w;
}

}  // namespace

Weight positive_part(const Weight& a) {
    return derived_weight(a, [a](double x) { return std::max(a(x), 0.0); });
}

Weight negative_part(const Weight& a) {
    return derived_weight(a, [a](double x) { return std::max(-a(x), 0.0); });
}

Weight absolute_value(const Weight& a) {
    return derived_weight(a, [a](double x) { return std::abs(a(x)); });
}

namespace {

// Root of f on [lo, hi] with f(lo) < 0 <= f(hi) or the reverse, to width w.
double bisect_to_width(const std::function<double(double)>& f, double lo, double hi,
                       double width) {
    double flo = f(lo);
    while (hi - lo > width) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

SignPartition detect_sign_partition(const Weight& a, const PartitionOptions& opt) {
    if (opt.grid_n < 16) throw std::invalid_argument("detect_sign_partition: grid_n must be >= 16");
    const double L = a.length();
    const int n = opt.grid_n;
    const double tol = opt.sign_tol;

    std::vector<double> val(n + 1);
    for (int j = 0; j <= n; ++j) val[j] = a(L * j / n);

    bool any_nonneg = false, any_positive = false;
    for (double v : val) {
        if (v >= -tol) any_nonneg = true;
        if (v > tol) any_positive = true;
    }
    if (!any_nonneg)
        throw NoNonNegativeRegion("weight is below -" + std::to_string(tol) +
                                  " at every grid point");

    // maximal runs of a >= -tol; zero stretches never split a run, so the
    // result is the coarsest partition compatible with the grid
    struct Run {
        int j0, j1;
        bool positive;
    };
    std::vector<Run> runs;
    for (int j = 0; j <= n;) {
        if (val[j] < -tol) {
            ++j;
            continue;
        }
        Run r{j, j, false};
        while (r.j1 + 1 <= n && val[r.j1 + 1] >= -tol) ++r.j1;
        for (int k = r.j0; k <= r.j1; ++k)
            if (val[k] > tol) {
                r.positive = true;
                break;
            }
        runs.push_back(r);
        j = r.j1 + 1;
    }
    if (any_positive)
        std::erase_if(runs, [](const Run& r) { return !r.positive; });

    if (runs.size() > 64)
        throw Error("detect_sign_partition: more than 64 nonnegative intervals; "
                    "declare the partition or raise sign_tol");

    const double width = L / (static_cast<double>(n) * n);
    auto f = [&](double x) { return a(x) + tol; };
    SignPartition part;
    part.tolerance = tol;
    for (const Run& r : runs) {
        Interval iv;
        iv.lo = (r.j0 == 0) ? 0.0 : bisect_to_width(f, L * (r.j0 - 1) / n, L * r.j0 / n, width);
        iv.hi = (r.j1 == n) ? L : bisect_to_width(f, L * r.j1 / n, L * (r.j1 + 1) / n, width);
        part.intervals.push_back(iv);
    }
    return part;
}

std::string check_partition(const Weight& a, const SignPartition& p, int grid_n) {
    const double L = a.length();
    const double tol = std::max(p.tolerance, 1e-12);
    for (int j = 0; j <= grid_n; ++j) {
        const double x = L * j / grid_n;
        bool inside = false;
        for (const auto& iv : p.intervals)
            if (iv.contains(x)) {
                inside = true;
                break;
            }
        const double v = a(x);
        if (inside && v < -tol) {
            std::ostringstream os;
            os << "a(" << x << ") = " << v << " < -tol inside a nonnegativity interval";
            return os.str();
        }
        if (!inside && v > tol) {
            std::ostringstream os;
            os << "a(" << x << ") = " << v << " > tol outside every nonnegativity interval";
            return os.str();
        }
    }
    return {};
}

}  // namespace posbvp
