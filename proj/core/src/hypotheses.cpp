#include "posbvp/hypotheses.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "posbvp/errors.hpp"

namespace posbvp {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::PassAdvisory: return "pass-advisory";
        case Verdict::Indeterminate: return "indeterminate";
        case Verdict::Fail: return "fail";
    }
    return "fail";
}

Verdict verdict_from_string(const std::string& s) {
    if (s == "pass") return Verdict::Pass;
    if (s == "pass-advisory") return Verdict::PassAdvisory;
    if (s == "indeterminate") return Verdict::Indeterminate;
    if (s == "fail") return Verdict::Fail;
    throw std::invalid_argument("unknown verdict: " + s);
}

namespace {

Verdict worst(Verdict a, Verdict b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

// strict inequality with an honesty band of 10*tol*threshold
Verdict verdict_from_margin(double margin, double threshold, double tol) {
    if (std::isnan(margin)) return Verdict::Indeterminate;
    const double band = 10.0 * tol * std::abs(threshold);
    if (margin > band) return Verdict::Pass;
    if (margin < -band) return Verdict::Fail;
    return Verdict::Indeterminate;
}

double resolve_delta(const ProblemSpec& p, const CheckOptions& opt) {
    if (opt.delta > 0.0) return opt.delta;
    if (p.g.delta > 0.0) return p.g.delta;
    return default_delta(p.g);
}

AsymptoticDescriptors resolve_descriptors(const ProblemSpec& p, double delta) {
    if (p.g.descriptors) return *p.g.descriptors;
    return estimate_asymptotics(p.g, delta);
}

H1Report make_h1(const ProblemSpec& p, const CheckOptions& opt) {
    H1Report r;
    if (p.weight.partition()) {
        r.declared = true;
        r.partition = *p.weight.partition();
        const std::string diag = check_partition(p.weight, r.partition, opt.partition.grid_n);
        if (diag.empty()) {
            r.verdict = Verdict::Pass;
        } else {
            r.verdict = Verdict::Fail;
            r.note = "declared partition violated: " + diag;
        }
        return r;
    }
    try {
        r.partition = detect_sign_partition(p.weight, opt.partition);
        r.verdict = Verdict::Pass;
        std::ostringstream os;
        os << "detected " << r.partition.size() << " nonnegativity interval(s)";
        r.note = os.str();
    } catch (const NoNonNegativeRegion& e) {
        r.verdict = Verdict::Fail;
        r.note = e.what();
    }
    return r;
}

H2Report make_h2(const ProblemSpec& p) {
    H2Report r;
    r.g_at_zero = p.g(0.0);
    const double s_hi = std::max(1.0, p.g.delta);
    for (int j = 1; j <= 256; ++j) {
        const double s = s_hi * std::pow(10.0, -8.0 * (256 - j) / 256.0);
        if (p.g(s) != 0.0) {
            r.nontrivial = true;
            break;
        }
    }
    r.verdict = (std::abs(r.g_at_zero) <= 1e-14 && r.nontrivial) ? Verdict::Pass : Verdict::Fail;
    if (!r.nontrivial) r.note = "g vanishes at every probe";
    return r;
}

}  // namespace

H3Report check_h3(const ProblemSpec& p, const CheckOptions& opt) {
    H3Report r;
    const double delta = resolve_delta(p, opt);

    if (p.g.near_zero_class) {
        r.cls = *p.g.near_zero_class;
        r.class_declared = true;
    } else {
        try {
            r.cls = classify_near_zero(p.g, delta, opt.class_grid_n).cls;
        } catch (const InconclusiveClassification& e) {
            r.verdict = Verdict::Indeterminate;
            r.note = e.what();
            return r;
        }
    }
    r.descriptors = resolve_descriptors(p, delta);

    const char* cond = nullptr;
    switch (r.cls) {
        case NearZeroClass::NonNegative:
            r.weight_kind = WeightKind::PositivePart;
            cond = "g0_sup < lambda(a+)";
            break;
        case NearZeroClass::NonPositive:
            r.weight_kind = WeightKind::NegativePart;
            cond = "g0_inf > -lambda(a-)";
            break;
        case NearZeroClass::SignChanging:
            r.weight_kind = WeightKind::AbsoluteValue;
            cond = "-lambda(|a|) < g0_inf, g0_sup < lambda(|a|)";
            break;
    }

    EigenOptions eopt;
    eopt.tol = opt.tol;
    try {
        r.eigen = first_eigenvalue(p.weight, {0.0, p.weight.length()}, r.weight_kind, eopt);
    } catch (const WeightVanishes& e) {
        r.verdict = Verdict::Fail;
        r.note = std::string("required weight part vanishes: ") + e.what();
        return r;
    } catch (const BracketOverflow& e) {
        r.verdict = Verdict::Indeterminate;
        r.note = e.what();
        return r;
    }

    const double lambda = r.eigen->lambda;
    switch (r.cls) {
        case NearZeroClass::NonNegative:
            r.margin = lambda - r.descriptors.g0_sup;
            break;
        case NearZeroClass::NonPositive:
            r.margin = r.descriptors.g0_inf + lambda;
            break;
        case NearZeroClass::SignChanging:
            r.margin = std::min(lambda - r.descriptors.g0_sup, r.descriptors.g0_inf + lambda);
            break;
    }
    if (std::isinf(r.margin)) {
        r.verdict = r.margin > 0 ? Verdict::Pass : Verdict::Fail;
    } else {
        r.verdict = verdict_from_margin(r.margin, lambda, opt.tol);
    }
    std::ostringstream os;
    os << cond << " with margin " << r.margin;
    r.note = os.str();
    return r;
}

H4Report check_h4(const ProblemSpec& p, const SignPartition& partition,
                  const CheckOptions& opt) {
    H4Report r;
    if (partition.intervals.empty()) {
        r.verdict = Verdict::Fail;
        r.note = "no nonnegativity interval";
        return r;
    }
    const double delta = resolve_delta(p, opt);
    const double g_infty = resolve_descriptors(p, delta).g_infty;

    EigenOptions eopt;
    eopt.tol = opt.tol;
    r.verdict = Verdict::Pass;
    for (const Interval& iv : partition.intervals) {
        H4Entry e;
        e.interval = iv;
        try {
            e.eigen = first_eigenvalue(p.weight, iv, WeightKind::PositivePart, eopt);
            e.margin = g_infty - e.eigen->lambda;
            if (std::isinf(e.margin))
                e.verdict = e.margin > 0 ? Verdict::Pass : Verdict::Fail;
            else
                e.verdict = verdict_from_margin(e.margin, e.eigen->lambda, opt.tol);
            std::ostringstream os;
            os << "g_infty vs lambda_1 = " << e.eigen->lambda;
            e.note = os.str();
        } catch (const WeightVanishes& ex) {
            e.verdict = Verdict::Fail;
            e.margin = -std::numeric_limits<double>::infinity();
            e.note = std::string("a+ vanishes on the interval: ") + ex.what();
        } catch (const BracketOverflow& ex) {
            e.verdict = Verdict::Indeterminate;
            e.note = ex.what();
        }
        r.verdict = worst(r.verdict, e.verdict);
        r.entries.push_back(std::move(e));
    }
    return r;
}

HypothesisReport check_all(const ProblemSpec& p, const CheckOptions& opt) {
    HypothesisReport rep;
    rep.h1 = make_h1(p, opt);
    rep.h2 = make_h2(p);
    rep.h3 = check_h3(p, opt);

    if (rep.h1.verdict == Verdict::Fail) {
        rep.h4.verdict = Verdict::Fail;
        rep.h4.note = "no nonnegativity interval";
    } else {
        rep.h4 = check_h4(p, rep.h1.partition, opt);
    }

    rep.overall = worst(worst(rep.h1.verdict, rep.h2.verdict),
                        worst(rep.h3.verdict, rep.h4.verdict));
    if (rep.h3.descriptors.source == DescriptorSource::GridEstimated &&
        rep.h3.verdict != Verdict::Fail) {
        rep.warnings.push_back(
            "asymptotic descriptors are grid estimates; sampled limits are not limits");
        rep.overall = worst(rep.overall, Verdict::PassAdvisory);
    }
    if (!rep.h1.declared && rep.h1.verdict == Verdict::Pass)
        rep.warnings.push_back("sign partition auto-detected on a grid");
    return rep;
}

LambdaScanResult lambda_threshold_scan(const ProblemSpec& p, std::span<const double> scales,
                                       const CheckOptions& opt) {
    LambdaScanResult out;
    SignPartition part =
        p.weight.partition() ? *p.weight.partition() : detect_sign_partition(p.weight, opt.partition);

    EigenOptions eopt;
    eopt.tol = opt.tol;
    double lam_max = 0.0;
    for (const Interval& iv : part.intervals)
        lam_max = std::max(lam_max,
                           first_eigenvalue(p.weight, iv, WeightKind::PositivePart, eopt).lambda);

    const double delta = resolve_delta(p, opt);
    const double g_infty = resolve_descriptors(p, delta).g_infty;
    out.lambda_star = std::isinf(g_infty) ? 0.0 : lam_max / g_infty;

    for (double mu : scales) {
        if (!(mu > 0.0)) throw std::invalid_argument("lambda_threshold_scan: scales must be > 0");
        ProblemSpec scaled{p.weight.with_scale(p.weight.scale() * mu), p.g, p.name};
        H4Report h4 = check_h4(scaled, part, opt);
        double mm = std::numeric_limits<double>::infinity();
        for (const auto& e : h4.entries) mm = std::min(mm, e.margin);
        out.points.push_back({mu, h4.verdict, mm});
    }
    return out;
}

}  // namespace posbvp
