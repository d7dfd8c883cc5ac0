#include "posbvp/green.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace posbvp {

double GreenKernel::operator()(double x, double xi) const {
    return std::min(x, xi) * (L - std::max(x, xi)) / L;
}

namespace {

// composite Simpson with an even panel count proportional to the length
template <typename F>
double simpson(F&& f, double lo, double hi, int n) {
    if (hi <= lo) return 0.0;
    const double h = (hi - lo) / n;
    double odd = 0.0, even = 0.0;
    for (int j = 1; j < n; j += 2) odd += f(lo + j * h);
    for (int j = 2; j < n; j += 2) even += f(lo + j * h);
    return h / 3.0 * (f(lo) + 4.0 * odd + 2.0 * even + f(hi));
}

int panels_for(double len, double L, int quad_n) {
    const int n = static_cast<int>(std::ceil(quad_n * len / L / 2.0)) * 2;
    return std::max(2, n);
}

}  // namespace

std::vector<double> apply_operator(const ProblemSpec& p,
                                   const std::function<double(double)>& u,
                                   std::span<const double> xs, int quad_n) {
    if (quad_n < 64) throw std::invalid_argument("apply_operator: quad_n must be >= 64");
    const double L = p.weight.length();
    auto f = [&](double xi) { return p.weight(xi) * p.g.extended(u(xi)); };

    std::vector<double> out;
    out.reserve(xs.size());
    for (double x : xs) {
        // kernel split at the diagonal kink xi = x
        double left = 0.0, right = 0.0;
        if (x > 0.0)
            left = simpson([&](double xi) { return xi * (L - x) / L * f(xi); }, 0.0, x,
                           panels_for(x, L, quad_n));
        if (x < L)
            right = simpson([&](double xi) { return x * (L - xi) / L * f(xi); }, x, L,
                            panels_for(L - x, L, quad_n));
        out.push_back(left + right);
    }
    return out;
}

std::vector<double> apply_operator(const ProblemSpec& p, const SolutionProfile& u,
                                   int quad_n) {
    std::vector<double> xs;
    xs.reserve(u.samples.size());
    for (const auto& s : u.samples) xs.push_back(s.x);
    return apply_operator(p, [&u](double xi) { return u.value(xi); }, xs, quad_n);
}

double operator_residual(const ProblemSpec& p, const SolutionProfile& u, int quad_n) {
    const auto phi = apply_operator(p, u, quad_n);
    double worst = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i)
        worst = std::max(worst, std::abs(u.samples[i].u - phi[i]));
    return worst;
}

}  // namespace posbvp
