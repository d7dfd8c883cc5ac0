#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace posbvp {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

// Ordered, pairwise disjoint closed intervals on which the weight is
// nonnegative; the weight is nonpositive (within `tolerance`) elsewhere.
struct SignPartition {
    std::vector<Interval> intervals;
    double tolerance = 0.0;  // sign tolerance used when auto-detected

    std::size_t size() const { return intervals.size(); }
};

// Sign-changing coefficient a(x) on [0, L].  `scale > 0` multiplies the
// base evaluator, so sign structure is scale-invariant.  `kinks` lists
// abscissae where the evaluator may lose smoothness; integrators land a
// mesh point on each of them.
class Weight {
public:
    Weight(double length, std::function<double(double)> base,
           std::optional<SignPartition> partition = std::nullopt,
           double scale = 1.0);

    double length() const { return length_; }
    double scale() const { return scale_; }
    double operator()(double x) const { return scale_ * base_(x); }

    const std::optional<SignPartition>& partition() const { return partition_; }
    const std::vector<double>& kinks() const { return kinks_; }

    void set_partition(SignPartition p);
    void add_kinks(const std::vector<double>& xs);

    Weight with_scale(double scale) const;

private:
    double length_;
    std::function<double(double)> base_;
    std::optional<SignPartition> partition_;
    std::vector<double> kinks_;
    double scale_;
};

// max(a, 0) / max(-a, 0) / |a|.  Partition endpoints of the source are
// kept as kinks; the derived weight carries no sign partition of its own.
Weight positive_part(const Weight& a);
Weight negative_part(const Weight& a);
Weight absolute_value(const Weight& a);

struct PartitionOptions {
    int grid_n = 2048;          // >= 16
    double sign_tol = 1e-12;    // |a| <= tol counts as zero
};

// Coarsest partition: grid-classify each cell, merge nonnegative runs
// across zero stretches, then refine endpoints by bisection on a(x)+tol
// down to width L/grid_n^2.  Throws NoNonNegativeRegion when every cell
// is negative.
SignPartition detect_sign_partition(const Weight& a, const PartitionOptions& opt = {});

// Verifies a(x) >= -tol on the intervals and a(x) <= tol between them,
// on a grid of `grid_n` points.  Returns an empty string on success and
// a diagnostic otherwise.
std::string check_partition(const Weight& a, const SignPartition& p, int grid_n = 2048);

}  // namespace posbvp
