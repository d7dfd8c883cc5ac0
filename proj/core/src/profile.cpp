#include "posbvp/profile.hpp"

#include <algorithm>
#include <stdexcept>

namespace posbvp {

namespace {

// index of the segment [x_i, x_{i+1}] containing x
std::size_t segment_of(const std::vector<ProfileSample>& s, double x) {
    if (s.size() < 2) throw std::logic_error("profile: need at least two samples");
    if (x < s.front().x || x > s.back().x)
        throw std::out_of_range("profile: abscissa outside the sampled range");
    auto it = std::upper_bound(s.begin(), s.end(), x,
                               [](double v, const ProfileSample& p) { return v < p.x; });
    std::size_t i = static_cast<std::size_t>(it - s.begin());
    if (i > 0) --i;
    if (i >= s.size() - 1) i = s.size() - 2;
    return i;
}

}  // namespace

double SolutionProfile::value(double x) const {
    const std::size_t i = segment_of(samples, x);
    const auto& p0 = samples[i];
    const auto& p1 = samples[i + 1];
    const double h = p1.x - p0.x;
    if (h <= 0.0) return p0.u;
    const double t = (x - p0.x) / h;
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * p0.u + (t3 - 2 * t2 + t) * h * p0.v +
           (-2 * t3 + 3 * t2) * p1.u + (t3 - t2) * h * p1.v;
}

double SolutionProfile::derivative(double x) const {
    const std::size_t i = segment_of(samples, x);
    const auto& p0 = samples[i];
    const auto& p1 = samples[i + 1];
    const double h = p1.x - p0.x;
    if (h <= 0.0) return p0.v;
    const double t = (x - p0.x) / h;
    const double t2 = t * t;
    return (6 * t2 - 6 * t) * (p0.u - p1.u) / h + (3 * t2 - 4 * t + 1) * p0.v +
           (3 * t2 - 2 * t) * p1.v;
}

}  // namespace posbvp
