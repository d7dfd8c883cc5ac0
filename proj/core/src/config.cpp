#include "posbvp/config.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace posbvp {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

const std::set<std::string> kTasks = {"check", "solve",  "poincare",
                                      "eigen", "radial", "lambda-scan"};

void check_table_paths(const ParamMap& params, const std::string& base_dir,
                       const std::string& what) {
    auto it = params.find("file");
    if (it == params.end()) return;
    std::filesystem::path p = it->second;
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    if (!std::filesystem::exists(p))
        throw ConfigError(what + " table file not found: " + p.string());
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::string& base_dir) {
    RunConfig cfg;
    cfg.base_dir = base_dir;
    std::string section;
    bool have_problem = false, have_task = false;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError("unterminated section header", lineno);
            section = trim(line.substr(1, line.size() - 2));
            if (section != "problem" && section != "task" && section != "output")
                throw ConfigError("unknown section '" + section + "'", lineno);
            if (section == "problem") have_problem = true;
            if (section == "task") have_task = true;
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("expected 'key = value'", lineno);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key", lineno);
        if (section.empty()) throw ConfigError("key outside any [section]", lineno);

        if (section == "problem") {
            auto& p = cfg.problem;
            if (key == "name")
                p.name = value;
            else if (key == "kind") {
                if (value != "line" && value != "radial")
                    throw ConfigError("problem.kind must be 'line' or 'radial'", lineno);
                p.kind = value;
            } else if (key == "length")
                p.length = get_param({{key, value}}, key);
            else if (key == "dimension") {
                const double d = get_param({{key, value}}, key);
                p.dimension = static_cast<int>(d);
                if (p.dimension < 2 || d != p.dimension)
                    throw ConfigError("problem.dimension must be an integer >= 2", lineno);
            } else if (key == "r1")
                p.r1 = get_param({{key, value}}, key);
            else if (key == "r2")
                p.r2 = get_param({{key, value}}, key);
            else if (key == "weight")
                p.weight_family = value;
            else if (key.starts_with("weight."))
                p.weight_params[key.substr(7)] = value;
            else if (key == "g")
                p.g_family = value;
            else if (key.starts_with("g."))
                p.g_params[key.substr(2)] = value;
            else
                throw ConfigError("unknown problem key '" + key + "'", lineno);
        } else if (section == "task") {
            if (key == "name") {
                if (!kTasks.count(value)) throw ConfigError("unknown task '" + value + "'", lineno);
                cfg.task.name = value;
            } else {
                cfg.task.params[key] = value;
            }
        } else {  // output
            auto& o = cfg.output;
            if (key == "dir")
                o.dir = value;
            else if (key == "format") {
                if (value != "csv" && value != "json" && value != "both")
                    throw ConfigError("output.format must be csv, json, or both", lineno);
                o.format = value;
            } else if (key == "precision") {
                o.precision = static_cast<int>(get_param({{key, value}}, key));
                if (o.precision < 1 || o.precision > 17)
                    throw ConfigError("output.precision must be in [1, 17]", lineno);
            } else
                throw ConfigError("unknown output key '" + key + "'", lineno);
        }
    }

    if (!have_problem) throw ConfigError("missing [problem] section");
    if (!have_task || cfg.task.name.empty()) throw ConfigError("missing [task] section with name");
    if (cfg.problem.weight_family.empty()) throw ConfigError("problem: missing weight family");
    if (cfg.problem.g_family.empty()) throw ConfigError("problem: missing nonlinearity family");
    if (cfg.problem.kind == "radial" && !(0.0 < cfg.problem.r1 && cfg.problem.r1 < cfg.problem.r2))
        throw ConfigError("radial problem: need 0 < r1 < r2");

    check_table_paths(cfg.problem.weight_params, base_dir, "weight");
    check_table_paths(cfg.problem.g_params, base_dir, "nonlinearity");
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), std::filesystem::path(path).parent_path().string());
}

}  // namespace posbvp
