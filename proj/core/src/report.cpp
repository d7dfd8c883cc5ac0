#include "posbvp/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace posbvp {

json json_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

double number_from_json(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
        throw std::invalid_argument("not a number: " + s);
    }
    return j.get<double>();
}

namespace {

const char* kind_name(WeightKind k) {
    switch (k) {
        case WeightKind::PositivePart: return "positive-part";
        case WeightKind::NegativePart: return "negative-part";
        case WeightKind::AbsoluteValue: return "absolute-value";
    }
    return "positive-part";
}

WeightKind kind_from_name(const std::string& s) {
    if (s == "positive-part") return WeightKind::PositivePart;
    if (s == "negative-part") return WeightKind::NegativePart;
    if (s == "absolute-value") return WeightKind::AbsoluteValue;
    throw std::invalid_argument("unknown weight kind: " + s);
}

const char* class_name(NearZeroClass c) {
    switch (c) {
        case NearZeroClass::NonNegative: return "nonnegative";
        case NearZeroClass::NonPositive: return "nonpositive";
        case NearZeroClass::SignChanging: return "sign-changing";
    }
    return "nonnegative";
}

NearZeroClass class_from_name(const std::string& s) {
    if (s == "nonnegative") return NearZeroClass::NonNegative;
    if (s == "nonpositive") return NearZeroClass::NonPositive;
    if (s == "sign-changing") return NearZeroClass::SignChanging;
    throw std::invalid_argument("unknown near-zero class: " + s);
}

json intervals_json(const std::vector<Interval>& ivs) {
    json a = json::array();
    for (const auto& iv : ivs) a.push_back({json_number(iv.lo), json_number(iv.hi)});
    return a;
}

}  // namespace

json to_json(const EigenResult& r) {
    json j;
    j["lambda"] = json_number(r.lambda);
    j["interval"] = {json_number(r.interval.lo), json_number(r.interval.hi)};
    j["weight_kind"] = kind_name(r.kind);
    j["residual"] = json_number(r.residual);
    j["bracket"] = {json_number(r.bracket_lo), json_number(r.bracket_hi)};
    j["bisections"] = r.bisections;
    return j;
}

json to_json(const HypothesisReport& r) {
    json j;
    {
        json h1;
        h1["verdict"] = to_string(r.h1.verdict);
        h1["declared"] = r.h1.declared;
        h1["intervals"] = intervals_json(r.h1.partition.intervals);
        h1["tolerance"] = json_number(r.h1.partition.tolerance);
        h1["note"] = r.h1.note;
        j["h1"] = std::move(h1);
    }
    {
        json h2;
        h2["verdict"] = to_string(r.h2.verdict);
        h2["g_at_zero"] = json_number(r.h2.g_at_zero);
        h2["nontrivial"] = r.h2.nontrivial;
        h2["note"] = r.h2.note;
        j["h2"] = std::move(h2);
    }
    {
        json h3;
        h3["verdict"] = to_string(r.h3.verdict);
        h3["class"] = class_name(r.h3.cls);
        h3["class_declared"] = r.h3.class_declared;
        h3["g0_inf"] = json_number(r.h3.descriptors.g0_inf);
        h3["g0_sup"] = json_number(r.h3.descriptors.g0_sup);
        h3["g_infty"] = json_number(r.h3.descriptors.g_infty);
        h3["descriptor_source"] = r.h3.descriptors.source == DescriptorSource::UserDeclared
                                      ? "user-declared"
                                      : "grid-estimated";
        h3["weight_kind"] = kind_name(r.h3.weight_kind);
        h3["eigen"] = r.h3.eigen ? to_json(*r.h3.eigen) : json(nullptr);
        h3["margin"] = json_number(r.h3.margin);
        h3["note"] = r.h3.note;
        j["h3"] = std::move(h3);
    }
    {
        json h4;
        h4["verdict"] = to_string(r.h4.verdict);
        json entries = json::array();
        for (const auto& e : r.h4.entries) {
            json je;
            je["interval"] = {json_number(e.interval.lo), json_number(e.interval.hi)};
            je["eigen"] = e.eigen ? to_json(*e.eigen) : json(nullptr);
            je["margin"] = json_number(e.margin);
            je["verdict"] = to_string(e.verdict);
            je["note"] = e.note;
            entries.push_back(std::move(je));
        }
        h4["entries"] = std::move(entries);
        h4["note"] = r.h4.note;
        j["h4"] = std::move(h4);
    }
    j["overall"] = to_string(r.overall);
    j["warnings"] = r.warnings;
    return j;
}

namespace {

EigenResult eigen_from_json(const json& j) {
    EigenResult r;
    r.lambda = number_from_json(j.at("lambda"));
    r.interval = {number_from_json(j.at("interval")[0]), number_from_json(j.at("interval")[1])};
    r.kind = kind_from_name(j.at("weight_kind").get<std::string>());
    r.residual = number_from_json(j.at("residual"));
    r.bracket_lo = number_from_json(j.at("bracket")[0]);
    r.bracket_hi = number_from_json(j.at("bracket")[1]);
    r.bisections = j.at("bisections").get<int>();
    return r;
}

}  // namespace

HypothesisReport hypothesis_report_from_json(const json& j) {
    HypothesisReport r;
    {
        const json& h1 = j.at("h1");
        r.h1.verdict = verdict_from_string(h1.at("verdict").get<std::string>());
        r.h1.declared = h1.at("declared").get<bool>();
        for (const auto& iv : h1.at("intervals"))
            r.h1.partition.intervals.push_back(
                {number_from_json(iv[0]), number_from_json(iv[1])});
        r.h1.partition.tolerance = number_from_json(h1.at("tolerance"));
        r.h1.note = h1.at("note").get<std::string>();
    }
    {
        const json& h2 = j.at("h2");
        r.h2.verdict = verdict_from_string(h2.at("verdict").get<std::string>());
        r.h2.g_at_zero = number_from_json(h2.at("g_at_zero"));
        r.h2.nontrivial = h2.at("nontrivial").get<bool>();
        r.h2.note = h2.at("note").get<std::string>();
    }
    {
        const json& h3 = j.at("h3");
        r.h3.verdict = verdict_from_string(h3.at("verdict").get<std::string>());
        r.h3.cls = class_from_name(h3.at("class").get<std::string>());
        r.h3.class_declared = h3.at("class_declared").get<bool>();
        r.h3.descriptors.g0_inf = number_from_json(h3.at("g0_inf"));
        r.h3.descriptors.g0_sup = number_from_json(h3.at("g0_sup"));
        r.h3.descriptors.g_infty = number_from_json(h3.at("g_infty"));
        r.h3.descriptors.source = h3.at("descriptor_source").get<std::string>() == "user-declared"
                                      ? DescriptorSource::UserDeclared
                                      : DescriptorSource::GridEstimated;
        r.h3.weight_kind = kind_from_name(h3.at("weight_kind").get<std::string>());
        if (!h3.at("eigen").is_null()) r.h3.eigen = eigen_from_json(h3.at("eigen"));
        r.h3.margin = number_from_json(h3.at("margin"));
        r.h3.note = h3.at("note").get<std::string>();
    }
    {
        const json& h4 = j.at("h4");
        r.h4.verdict = verdict_from_string(h4.at("verdict").get<std::string>());
        for (const auto& je : h4.at("entries")) {
            H4Entry e;
            e.interval = {number_from_json(je.at("interval")[0]),
                          number_from_json(je.at("interval")[1])};
            if (!je.at("eigen").is_null()) e.eigen = eigen_from_json(je.at("eigen"));
            e.margin = number_from_json(je.at("margin"));
            e.verdict = verdict_from_string(je.at("verdict").get<std::string>());
            e.note = je.at("note").get<std::string>();
            r.h4.entries.push_back(std::move(e));
        }
        r.h4.note = h4.at("note").get<std::string>();
    }
    r.overall = verdict_from_string(j.at("overall").get<std::string>());
    for (const auto& w : j.at("warnings")) r.warnings.push_back(w.get<std::string>());
    return r;
}

std::string pretty_text(const HypothesisReport& r) {
    std::ostringstream os;
    os << "(H1) " << to_string(r.h1.verdict) << "  intervals:";
    for (const auto& iv : r.h1.partition.intervals) os << " [" << iv.lo << ", " << iv.hi << "]";
    if (!r.h1.note.empty()) os << "  (" << r.h1.note << ")";
    os << "\n(H2) " << to_string(r.h2.verdict) << "  g(0) = " << r.h2.g_at_zero
       << (r.h2.nontrivial ? ", g not identically zero" : ", g ~ 0");
    os << "\n(H3) " << to_string(r.h3.verdict) << "  class " << class_name(r.h3.cls);
    if (r.h3.eigen) os << ", lambda = " << r.h3.eigen->lambda;
    os << ", margin = " << r.h3.margin;
    if (!r.h3.note.empty()) os << "  (" << r.h3.note << ")";
    os << "\n(H4) " << to_string(r.h4.verdict);
    for (const auto& e : r.h4.entries) {
        os << "\n     [" << e.interval.lo << ", " << e.interval.hi << "] "
           << to_string(e.verdict);
        if (e.eigen) os << "  lambda_1 = " << e.eigen->lambda;
        os << "  margin = " << e.margin;
    }
    if (!r.h4.note.empty()) os << "  (" << r.h4.note << ")";
    os << "\noverall: " << to_string(r.overall) << "\n";
    for (const auto& w : r.warnings) os << "warning: " << w << "\n";
    return os.str();
}

std::string format_double(double x, int precision) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    return buf;
}

namespace {

void write_whole_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path);
    out << content;
    if (!out) throw Error("short write on " + path);
}

}  // namespace

void write_poincare_csv(const std::string& path, const std::vector<PoincarePoint>& pts,
                        int precision) {
    std::ostringstream os;
    os << "c,uL,vL,escaped,positive_interior\n";
    for (const auto& p : pts)
        os << format_double(p.c, precision) << ',' << format_double(p.end_u, precision) << ','
           << format_double(p.end_v, precision) << ',' << (p.escaped ? 1 : 0) << ','
           << (p.positive_interior ? 1 : 0) << '\n';
    write_whole_file(path, os.str());
}

void write_profile_csv(const std::string& path, const SolutionProfile& u, int precision) {
    std::ostringstream os;
    os << "x,u,v\n";
    for (const auto& s : u.samples)
        os << format_double(s.x, precision) << ',' << format_double(s.u, precision) << ','
           << format_double(s.v, precision) << '\n';
    write_whole_file(path, os.str());
}

void write_radial_csv(const std::string& path, const std::vector<RadialSample>& samples,
                      int precision) {
    std::ostringstream os;
    os << "r,w,dw\n";
    for (const auto& s : samples)
        os << format_double(s.r, precision) << ',' << format_double(s.w, precision) << ','
           << format_double(s.dw, precision) << '\n';
    write_whole_file(path, os.str());
}

}  // namespace posbvp
