#pragma once

#include <map>
#include <string>
#include <vector>

#include "posbvp/nonlinearity.hpp"
#include "posbvp/weight.hpp"

namespace posbvp {

// String-keyed parameters as parsed from a config section.
using ParamMap = std::map<std::string, std::string>;

double get_param(const ParamMap& m, const std::string& key);
double get_param(const ParamMap& m, const std::string& key, double fallback);
std::vector<double> get_param_list(const ParamMap& m, const std::string& key);

// Weight families on [0, length]:
//   constant    value=c                      (partition [0,L] when c > 0)
//   sin-k-pi    k=<int>                      sin(k pi x / L), exact partition
//   affine      a0=.. a1=..                  a0 + a1 x
//   table       file=<csv>                   piecewise-linear through (x, a) rows
Weight make_weight(const std::string& family, const ParamMap& params, double length,
                   const std::string& base_dir = "");

// Nonlinearity families (all satisfy g(0) = 0):
//   power-sum          coeffs=c1,..  powers=p1,..   sum c_i s^{p_i}
//   min-power-arctan   coeffs,powers,scale=A,slope=B   min(power-sum, A s atan(B s))
//   power-sin-inverse  alpha,p,beta,q                  alpha s^p + beta s^q sin(1/s)
//   table              file=<csv>                      piecewise-linear through (s, g)
// Declared attributes (class, delta, g0-inf, g0-sup, g-infty) come from the
// same param map when present.
Nonlinearity make_nonlinearity(const std::string& family, const ParamMap& params,
                               const std::string& base_dir = "");

// Radial weight a(r) on [r1, r2]; families constant, affine (a0 + a1 r),
// power (value * r^exponent), table.  The optional partition is in r.
struct RadialWeightSpec {
    std::function<double(double)> eval;
    std::optional<SignPartition> partition;
};
RadialWeightSpec make_radial_weight(const std::string& family, const ParamMap& params,
                                    double r1, double r2, const std::string& base_dir = "");

// Two-column CSV with strictly increasing abscissae; '#' comments allowed.
std::vector<std::pair<double, double>> load_table(const std::string& path);

}  // namespace posbvp
