#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "posbvp/hypotheses.hpp"
#include "posbvp/profile.hpp"
#include "posbvp/radial.hpp"
#include "posbvp/shooting.hpp"

namespace posbvp {

using json = nlohmann::ordered_json;

// Infinities serialize as the strings "inf"/"-inf" (JSON has no literal
// for them); everything finite is a plain number.
json json_number(double x);
double number_from_json(const json& j);

json to_json(const EigenResult& r);
json to_json(const HypothesisReport& r);
HypothesisReport hypothesis_report_from_json(const json& j);

std::string pretty_text(const HypothesisReport& r);

// CSV writers; no partial files (content assembled, then written at once).
std::string format_double(double x, int precision);
void write_poincare_csv(const std::string& path, const std::vector<PoincarePoint>& pts,
                        int precision = 17);
void write_profile_csv(const std::string& path, const SolutionProfile& u,
                       int precision = 17);
void write_radial_csv(const std::string& path, const std::vector<RadialSample>& samples,
                      int precision = 17);

}  // namespace posbvp
