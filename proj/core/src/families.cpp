#include "posbvp/families.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "posbvp/errors.hpp"

namespace posbvp {

namespace {

double parse_double(const std::string& key, const std::string& text) {
    std::string t = text;
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
    if (t == "inf" || t == "+inf") return std::numeric_limits<double>::infinity();
    if (t == "-inf") return -std::numeric_limits<double>::infinity();
    try {
        std::size_t pos = 0;
        const double v = std::stod(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("parameter '" + key + "': not a number: '" + text + "'");
    }
}

std::string resolve_path(const std::string& file, const std::string& base_dir) {
    if (file.empty() || file.front() == '/' || base_dir.empty()) return file;
    return base_dir + "/" + file;
}

// piecewise-linear through sorted (x, y); extrapolates with the end slopes
double lerp_table(const std::vector<std::pair<double, double>>& tab, double x) {
    if (x <= tab.front().first) {
        const auto& [x0, y0] = tab[0];
        const auto& [x1, y1] = tab[1];
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
    auto it = std::upper_bound(tab.begin(), tab.end(), x,
                               [](double v, const auto& p) { return v < p.first; });
    std::size_t i = static_cast<std::size_t>(it - tab.begin());
    if (i >= tab.size()) i = tab.size() - 1;
    const auto& [x0, y0] = tab[i - 1];
    const auto& [x1, y1] = tab[i];
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

}  // namespace

double get_param(const ParamMap& m, const std::string& key) {
    auto it = m.find(key);
    if (it == m.end()) throw ConfigError("missing parameter '" + key + "'");
    return parse_double(key, it->second);
}

double get_param(const ParamMap& m, const std::string& key, double fallback) {
    auto it = m.find(key);
    return it == m.end() ? fallback : parse_double(key, it->second);
}

std::vector<double> get_param_list(const ParamMap& m, const std::string& key) {
    auto it = m.find(key);
    if (it == m.end()) throw ConfigError("missing parameter '" + key + "'");
    std::vector<double> out;
    std::stringstream ss(it->second);
    std::string item;
    while (std::getline(ss, item, ','))
        if (item.find_first_not_of(" \t") != std::string::npos)
            out.push_back(parse_double(key, item));
    if (out.empty()) throw ConfigError("parameter '" + key + "': empty list");
    return out;
}

std::vector<std::pair<double, double>> load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open table file '" + path + "'");
    std::vector<std::pair<double, double>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ConfigError("table '" + path + "': expected 'x,y'", lineno);
        rows.emplace_back(parse_double("x", line.substr(0, comma)),
                          parse_double("y", line.substr(comma + 1)));
        if (rows.size() >= 2 && rows[rows.size() - 2].first >= rows.back().first)
            throw ConfigError("table '" + path + "': abscissae must be strictly increasing",
                              lineno);
    }
    if (rows.size() < 2) throw ConfigError("table '" + path + "': need at least two rows");
    return rows;
}

Weight make_weight(const std::string& family, const ParamMap& params, double length,
                   const std::string& base_dir) {
    if (!(length > 0.0)) throw ConfigError("weight: length must be positive");

    if (family == "constant") {
        const double v = get_param(params, "value", 1.0);
        std::optional<SignPartition> part;
        if (v > 0.0) part = SignPartition{{{0.0, length}}, 0.0};
        return Weight(length, [v](double) { return v; }, std::move(part));
    }
    if (family == "sin-k-pi") {
        const double kd = get_param(params, "k");
        const int k = static_cast<int>(kd);
        if (k < 1 || kd != k) throw ConfigError("weight sin-k-pi: k must be a positive integer");
        const double omega = k * std::numbers::pi / length;
        SignPartition part;
        for (int j = 0; 2 * j < k; ++j)
            part.intervals.push_back(
                {2.0 * j * length / k, std::min((2.0 * j + 1) * length / k, length)});
        return Weight(length, [omega](double x) { return std::sin(omega * x); },
                      std::move(part));
    }
    if (family == "affine") {
        const double a0 = get_param(params, "a0");
        const double a1 = get_param(params, "a1");
        return Weight(length, [a0, a1](double x) { return a0 + a1 * x; });
    }
    if (family == "table") {
        auto it = params.find("file");
        if (it == params.end()) throw ConfigError("weight table: missing parameter 'file'");
        auto tab = load_table(resolve_path(it->second, base_dir));
        if (tab.front().first > 1e-9 || tab.back().first < length - 1e-9)
            throw ConfigError("weight table must cover [0, length]");
        Weight w(length, [tab](double x) { return lerp_table(tab, x); });
        std::vector<double> ks;
        for (const auto& [x, y] : tab) ks.push_back(x);
        w.add_kinks(ks);
        return w;
    }
    throw ConfigError("unknown weight family '" + family + "'");
}

namespace {

std::function<double(double)> make_power_sum(const ParamMap& params) {
    auto coeffs = get_param_list(params, "coeffs");
    auto powers = get_param_list(params, "powers");
    if (coeffs.size() != powers.size())
        throw ConfigError("power-sum: coeffs and powers must have equal length");
    for (double p : powers)
        if (!(p > 0.0)) throw ConfigError("power-sum: powers must be positive");
    return [coeffs, powers](double s) {
        double acc = 0.0;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            acc += coeffs[i] * std::pow(s, powers[i]);
        return acc;
    };
}

void apply_declared_attributes(Nonlinearity& g, const ParamMap& params) {
    if (auto it = params.find("class"); it != params.end()) {
        const std::string& c = it->second;
        if (c == "nonnegative")
            g.near_zero_class = NearZeroClass::NonNegative;
        else if (c == "nonpositive")
            g.near_zero_class = NearZeroClass::NonPositive;
        else if (c == "sign-changing")
            g.near_zero_class = NearZeroClass::SignChanging;
        else
            throw ConfigError("unknown near-zero class '" + c + "'");
    }
    g.delta = get_param(params, "delta", 1.0);
    const bool has_inf = params.count("g0-inf"), has_sup = params.count("g0-sup"),
               has_gi = params.count("g-infty");
    if (has_inf || has_sup || has_gi) {
        if (!(has_inf && has_sup && has_gi))
            throw ConfigError("declare all of g0-inf, g0-sup, g-infty or none");
        AsymptoticDescriptors d;
        d.g0_inf = get_param(params, "g0-inf");
        d.g0_sup = get_param(params, "g0-sup");
        d.g_infty = get_param(params, "g-infty");
        d.source = DescriptorSource::UserDeclared;
        g.descriptors = d;
    }
}

}  // namespace

RadialWeightSpec make_radial_weight(const std::string& family, const ParamMap& params,
                                    double r1, double r2, const std::string& base_dir) {
    if (!(0.0 < r1 && r1 < r2)) throw ConfigError("radial weight: need 0 < r1 < r2");

    if (family == "constant") {
        const double v = get_param(params, "value", 1.0);
        RadialWeightSpec spec{[v](double) { return v; }, std::nullopt};
        if (v > 0.0) spec.partition = SignPartition{{{r1, r2}}, 0.0};
        return spec;
    }
    if (family == "affine") {
        const double a0 = get_param(params, "a0");
        const double a1 = get_param(params, "a1");
        return {[a0, a1](double r) { return a0 + a1 * r; }, std::nullopt};
    }
    if (family == "power") {
        const double v = get_param(params, "value", 1.0);
        const double e = get_param(params, "exponent");
        RadialWeightSpec spec{[v, e](double r) { return v * std::pow(r, e); }, std::nullopt};
        if (v > 0.0) spec.partition = SignPartition{{{r1, r2}}, 0.0};
        return spec;
    }
    if (family == "table") {
        auto it = params.find("file");
        if (it == params.end()) throw ConfigError("radial weight table: missing parameter 'file'");
        auto tab = load_table(resolve_path(it->second, base_dir));
        if (tab.front().first > r1 + 1e-9 || tab.back().first < r2 - 1e-9)
            throw ConfigError("radial weight table must cover [r1, r2]");
        return {[tab](double r) { return lerp_table(tab, r); }, std::nullopt};
    }
    throw ConfigError("unknown radial weight family '" + family + "'");
}

Nonlinearity make_nonlinearity(const std::string& family, const ParamMap& params,
                               const std::string& base_dir) {
    std::function<double(double)> eval;
    if (family == "power-sum") {
        eval = make_power_sum(params);
    } else if (family == "min-power-arctan") {
        auto ps = make_power_sum(params);
        const double scale = get_param(params, "scale");
        const double slope = get_param(params, "slope", 1.0);
        eval = [ps, scale, slope](double s) {
            return std::min(ps(s), scale * s * std::atan(slope * s));
        };
    } else if (family == "power-sin-inverse") {
        const double alpha = get_param(params, "alpha");
        const double p = get_param(params, "p");
        const double beta = get_param(params, "beta");
        const double q = get_param(params, "q");
        if (!(p > 0.0) || !(q > 0.0))
            throw ConfigError("power-sin-inverse: exponents must be positive");
        eval = [alpha, p, beta, q](double s) {
            if (s == 0.0) return 0.0;
            return alpha * std::pow(s, p) + beta * std::pow(s, q) * std::sin(1.0 / s);
        };
    } else if (family == "table") {
        auto it = params.find("file");
        if (it == params.end()) throw ConfigError("nonlinearity table: missing parameter 'file'");
        auto tab = load_table(resolve_path(it->second, base_dir));
        if (std::abs(tab.front().first) > 1e-12 || std::abs(tab.front().second) > 1e-12)
            throw ConfigError("nonlinearity table must start at (0, 0)");
        eval = [tab](double s) { return lerp_table(tab, s); };
    } else {
        throw ConfigError("unknown nonlinearity family '" + family + "'");
    }
    Nonlinearity g(std::move(eval), family);
    apply_declared_attributes(g, params);
    return g;
}

}  // namespace posbvp
