#pragma once

#include <functional>
#include <optional>
#include <string>

namespace posbvp {

enum class NearZeroClass { NonNegative, NonPositive, SignChanging };

enum class DescriptorSource { UserDeclared, GridEstimated };

// Asymptotic slope descriptors of g:
//   g0_inf  = liminf_{s->0+} g(s)/s   (may be -inf)
//   g0_sup  = limsup_{s->0+} g(s)/s   (may be +inf)
//   g_infty = liminf_{s->+inf} g(s)/s (may be +inf)
struct AsymptoticDescriptors {
    double g0_inf = 0.0;
    double g0_sup = 0.0;
    double g_infty = 0.0;
    DescriptorSource source = DescriptorSource::UserDeclared;
};

// Continuous g on [0, inf) with g(0) = 0.  Declared attributes are
// optional; checkers estimate missing ones on grids and mark the result
// accordingly.
class Nonlinearity {
public:
    explicit Nonlinearity(std::function<double(double)> eval,
                          std::string name = "");

    // s >= 0 only; callers on the extended line use `extended`.
    double operator()(double s) const { return eval_(s); }

    // Zero on s < 0, g elsewhere: the modification whose nonnegative
    // solutions coincide with solutions of the original problem.
    double extended(double s) const { return s < 0.0 ? 0.0 : eval_(s); }

    const std::string& name() const { return name_; }

    std::optional<NearZeroClass> near_zero_class;
    double delta = 1.0;  // radius of the near-zero window (0, delta]
    std::optional<AsymptoticDescriptors> descriptors;

private:
    std::function<double(double)> eval_;
    std::string name_;
};

struct NearZeroScan {
    NearZeroClass cls;
    // Sample abscissae witnessing each sign (NaN when unused).
    double positive_witness;
    double negative_witness;
};

// Signs of g on a log grid over (delta*1e-6, delta].  Definite sign =>
// NonNegative / NonPositive; witnesses of both signs => SignChanging;
// all samples vanish => InconclusiveClassification (caller must declare).
NearZeroScan classify_near_zero(const Nonlinearity& g, double delta, int grid_n = 256);

// Grid estimates: near-zero inf/sup of g(s)/s over the smallest sampled
// decade, g_infty as the min of g(s)/s over [s_max/1e3, s_max].  Always
// marked GridEstimated.
AsymptoticDescriptors estimate_asymptotics(const Nonlinearity& g, double delta,
                                           double s_max = 1e6, int grid_n = 512);

// min(1, smallest grid point where |g| first exceeds 1e-3 of its grid max).
double default_delta(const Nonlinearity& g);

}  // namespace posbvp
