#include "support/oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "posbvp/families.hpp"

namespace oracles {

double fd_first_eigenvalue(const std::function<double(double)>& w, double alpha,
                           double beta, int n) {
    if (n < 16) throw std::invalid_argument("fd oracle: n too small");
    const double h = (beta - alpha) / (n + 1);
    const double diag = 2.0 / (h * h), off = -1.0 / (h * h);

    std::vector<double> wv(n);
    for (int i = 0; i < n; ++i) wv[i] = w(alpha + (i + 1) * h);

    // Thomas factorization of the constant tridiagonal A
    std::vector<double> cp(n);  // modified superdiagonal
    cp[0] = off / diag;
    for (int i = 1; i < n; ++i) cp[i] = off / (diag - off * cp[i - 1]);

    auto solve = [&](std::vector<double>& rhs) {
        rhs[0] /= diag;
        for (int i = 1; i < n; ++i)
            rhs[i] = (rhs[i] - off * rhs[i - 1]) / (diag - off * cp[i - 1]);
        for (int i = n - 2; i >= 0; --i) rhs[i] -= cp[i] * rhs[i + 1];
    };

    std::vector<double> y(n, 1.0), z(n);
    double mu = 0.0;
    for (int it = 0; it < 20000; ++it) {
        for (int i = 0; i < n; ++i) z[i] = wv[i] * y[i];
        solve(z);  // z = A^{-1} W y
        double num = 0.0, den = 0.0, norm = 0.0;
        for (int i = 0; i < n; ++i) {
            num += z[i] * y[i];
            den += y[i] * y[i];
            norm = std::max(norm, std::abs(z[i]));
        }
        const double mu_new = num / den;
        if (norm == 0.0) throw std::runtime_error("fd oracle: weight annihilates the iterate");
        for (int i = 0; i < n; ++i) y[i] = z[i] / norm;
        if (it > 3 && std::abs(mu_new - mu) <= 1e-13 * std::abs(mu_new)) {
            mu = mu_new;
            break;
        }
        mu = mu_new;
    }
    if (!(mu > 0.0)) throw std::runtime_error("fd oracle: nonpositive dominant eigenvalue");
    return 1.0 / mu;
}

Rk4End rk4_shoot(const posbvp::ProblemSpec& p, double c, double h) {
    const double L = p.weight.length();
    const long n = std::lround(L / h);
    auto f = [&](double x, double u, double v, double& du, double& dv) {
        du = v;
        dv = -p.weight(x) * p.g.extended(u);
    };
    double u = 0.0, v = c;
    for (long i = 0; i < n; ++i) {
        const double x = L * i / n;
        const double hh = L * (i + 1) / n - x;  // exact endpoint arithmetic
        double k1u, k1v, k2u, k2v, k3u, k3v, k4u, k4v;
        f(x, u, v, k1u, k1v);
        f(x + hh / 2, u + hh / 2 * k1u, v + hh / 2 * k1v, k2u, k2v);
        f(x + hh / 2, u + hh / 2 * k2u, v + hh / 2 * k2v, k3u, k3v);
        f(x + hh, u + hh * k3u, v + hh * k3v, k4u, k4v);
        u += hh / 6 * (k1u + 2 * k2u + 2 * k3u + k4u);
        v += hh / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
    }
    return {u, v};
}

double simpson_integral(const std::function<double(double)>& f, double lo, double hi,
                        int n) {
    if (n % 2) ++n;
    const double h = (hi - lo) / n;
    double acc = f(lo) + f(hi);
    for (int j = 1; j < n; ++j) acc += f(lo + j * h) * (j % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

namespace {

posbvp::ProblemSpec build(const std::string& wf, const posbvp::ParamMap& wp,
                          const std::string& gf, const posbvp::ParamMap& gp,
                          const std::string& name) {
    return posbvp::ProblemSpec{posbvp::make_weight(wf, wp, 1.0),
                               posbvp::make_nonlinearity(gf, gp), name};
}

}  // namespace

posbvp::ProblemSpec two_hump_problem() {
    return build("sin-k-pi", {{"k", "3"}},
                 "min-power-arctan",
                 {{"coeffs", "20,-6,1"},
                  {"powers", "1.2,3,4"},
                  {"scale", "400"},
                  {"slope", "1"},
                  {"class", "nonnegative"},
                  {"delta", "1"},
                  {"g0-inf", "0"},
                  {"g0-sup", "0"},
                  {"g-infty", "628.3185307179587"}},
                 "two-hump");
}

posbvp::ProblemSpec four_hump_problem() {
    return build("sin-k-pi", {{"k", "7"}},
                 "power-sin-inverse",
                 {{"alpha", "1"},
                  {"p", "3"},
                  {"beta", "1"},
                  {"q", "2"},
                  {"class", "sign-changing"},
                  {"delta", "1"},
                  {"g0-inf", "0"},
                  {"g0-sup", "0"},
                  {"g-infty", "inf"}},
                 "four-hump");
}

posbvp::ProblemSpec cubic_problem() {
    return build("constant", {{"value", "1"}},
                 "power-sum",
                 {{"coeffs", "1"},
                  {"powers", "3"},
                  {"class", "nonnegative"},
                  {"delta", "1"},
                  {"g0-inf", "0"},
                  {"g0-sup", "0"},
                  {"g-infty", "inf"}},
                 "cubic");
}

}  // namespace oracles
