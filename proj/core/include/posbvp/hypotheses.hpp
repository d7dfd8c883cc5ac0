#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "posbvp/eigen.hpp"
#include "posbvp/nonlinearity.hpp"
#include "posbvp/problem.hpp"

namespace posbvp {

enum class Verdict { Pass, PassAdvisory, Indeterminate, Fail };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct CheckOptions {
    double tol = 1e-8;        // eigenvalue tolerance; margin band is 10*tol*lambda
    PartitionOptions partition;
    int class_grid_n = 256;   // near-zero classification grid
    double delta = 0.0;       // 0 = use the nonlinearity's own / default
};

struct H1Report {
    Verdict verdict = Verdict::Fail;
    SignPartition partition;
    bool declared = false;  // partition came with the weight
    std::string note;
};

struct H2Report {
    Verdict verdict = Verdict::Fail;
    double g_at_zero = 0.0;
    bool nontrivial = false;  // some grid sample has g != 0
    std::string note;
};

// Near-zero comparison against the first eigenvalue of the matching part
// of the weight on the full interval:
//   NonNegative:  g0_sup < lambda(a+);
//   NonPositive:  g0_inf > -lambda(a-);
//   SignChanging: -lambda(|a|) < g0_inf and g0_sup < lambda(|a|).
struct H3Report {
    Verdict verdict = Verdict::Fail;
    NearZeroClass cls = NearZeroClass::NonNegative;
    bool class_declared = false;
    AsymptoticDescriptors descriptors;
    WeightKind weight_kind = WeightKind::PositivePart;
    std::optional<EigenResult> eigen;
    double margin = 0.0;  // distance to the failing side; min of both for case 3
    std::string note;
};

struct H4Entry {
    Interval interval;
    std::optional<EigenResult> eigen;
    double margin = 0.0;  // g_infty - lambda_1(interval)
    Verdict verdict = Verdict::Fail;
    std::string note;
};

// Superlinear-growth comparison g_infty > lambda_1(a+ on I_i), every i.
struct H4Report {
    Verdict verdict = Verdict::Fail;
    std::vector<H4Entry> entries;
    std::string note;
};

struct HypothesisReport {
    H1Report h1;
    H2Report h2;
    H3Report h3;
    H4Report h4;
    Verdict overall = Verdict::Fail;
    std::vector<std::string> warnings;
};

// Individual checks; the partition argument is the detected/declared one.
H3Report check_h3(const ProblemSpec& p, const CheckOptions& opt = {});
H4Report check_h4(const ProblemSpec& p, const SignPartition& partition,
                  const CheckOptions& opt = {});

// All four, with verdict aggregation: overall = worst component verdict,
// capped at PassAdvisory when any descriptor was grid-estimated.
HypothesisReport check_all(const ProblemSpec& p, const CheckOptions& opt = {});

struct LambdaScanPoint {
    double scale = 0.0;
    Verdict h4 = Verdict::Fail;
    double min_margin = 0.0;
};

struct LambdaScanResult {
    double lambda_star = 0.0;  // max_i lambda_1(I_i) / g_infty
    std::vector<LambdaScanPoint> points;
};

// (H4) across the scaled family mu * a: the eigenvalues obey
// lambda_1(mu a+) = lambda_1(a+) / mu, so the hypothesis holds exactly
// for mu > lambda_star.  Scan verdicts must flip at lambda_star.
LambdaScanResult lambda_threshold_scan(const ProblemSpec& p, std::span<const double> scales,
                                       const CheckOptions& opt = {});

}  // namespace posbvp
