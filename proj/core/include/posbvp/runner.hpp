#pragma once

#include <optional>
#include <string>

#include "posbvp/config.hpp"

namespace posbvp {

struct RunOverrides {
    std::optional<std::string> task;
    std::optional<std::string> out_dir;
    std::optional<double> tol;  // task's primary tolerance
    std::optional<int> threads;
    std::optional<std::string> format;
};

// Executes the configured task and writes report.json plus task CSVs into
// the output directory.  Exit status: 0 task success, 2 verdict failure
// (hypotheses not satisfied), 1 operational error.
int run(const RunConfig& cfg, const RunOverrides& ov = {});

// parse + run; parse and I/O errors go to stderr and yield 1.
int run_config_file(const std::string& path, const RunOverrides& ov = {});

}  // namespace posbvp
