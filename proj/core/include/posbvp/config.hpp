#pragma once

#include <string>

#include "posbvp/errors.hpp"
#include "posbvp/families.hpp"

namespace posbvp {

// Flat INI-style config: '#' comments, [problem]/[task]/[output] sections,
// key = value lines.  Unknown sections or keys are errors with line numbers.
struct ProblemConfig {
    std::string name;
    std::string kind = "line";  // line | radial
    double length = 1.0;        // line problems
    std::string weight_family;
    ParamMap weight_params;
    std::string g_family;
    ParamMap g_params;
    int dimension = 3;  // radial problems
    double r1 = 1.0;
    double r2 = 2.0;
};

struct TaskConfig {
    std::string name;  // check | solve | poincare | eigen | radial | lambda-scan
    ParamMap params;
};

struct OutputConfig {
    std::string dir = ".";
    std::string format = "both";  // csv | json | both
    int precision = 17;
};

struct RunConfig {
    ProblemConfig problem;
    TaskConfig task;
    OutputConfig output;
    std::string base_dir;  // config file's directory; table paths resolve here
};

RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& base_dir = "");

}  // namespace posbvp
