#include "posbvp/runner.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "posbvp/green.hpp"
#include "posbvp/hypotheses.hpp"
#include "posbvp/radial.hpp"
#include "posbvp/report.hpp"

namespace posbvp {

namespace {

namespace fs = std::filesystem;

ProblemSpec build_line_problem(const ProblemConfig& pc, const std::string& base_dir) {
    Weight w = make_weight(pc.weight_family, pc.weight_params, pc.length, base_dir);
    Nonlinearity g = make_nonlinearity(pc.g_family, pc.g_params, base_dir);
    return ProblemSpec{std::move(w), std::move(g), pc.name};
}

RadialProblem build_radial_problem(const ProblemConfig& pc, const std::string& base_dir) {
    auto ws = make_radial_weight(pc.weight_family, pc.weight_params, pc.r1, pc.r2, base_dir);
    RadialProblem rp{pc.dimension,
                     pc.r1,
                     pc.r2,
                     std::move(ws.eval),
                     make_nonlinearity(pc.g_family, pc.g_params, base_dir),
                     std::move(ws.partition),
                     pc.name};
    return rp;
}

CheckOptions check_options(const TaskConfig& t) {
    CheckOptions o;
    o.tol = get_param(t.params, "tol", 1e-8);
    o.partition.grid_n = static_cast<int>(get_param(t.params, "grid-n", 2048));
    o.partition.sign_tol = get_param(t.params, "sign-tol", 1e-12);
    o.delta = get_param(t.params, "delta", 0.0);
    return o;
}

ShootingOptions shooting_options(const TaskConfig& t, int threads) {
    ShootingOptions o;
    o.c_min = get_param(t.params, "c-min", 0.0);
    o.c_max = get_param(t.params, "c-max", 12.0);
    o.n_scan = static_cast<int>(get_param(t.params, "n-scan", 481));
    o.tol_bvp = get_param(t.params, "tol-bvp", 1e-9);
    o.tol_ode = get_param(t.params, "tol-ode", 1e-10);
    o.cap = get_param(t.params, "cap", 1e8);
    o.threads = threads;
    return o;
}

json problem_json(const ProblemConfig& pc) {
    json j;
    j["name"] = pc.name;
    j["kind"] = pc.kind;
    if (pc.kind == "line") {
        j["length"] = json_number(pc.length);
    } else {
        j["dimension"] = pc.dimension;
        j["r1"] = json_number(pc.r1);
        j["r2"] = json_number(pc.r2);
    }
    j["weight"] = pc.weight_family;
    j["g"] = pc.g_family;
    return j;
}

json solution_summary(const SolutionProfile& s) {
    json j;
    j["c"] = json_number(s.initial_slope);
    j["boundary_residual"] = json_number(s.boundary_residual);
    j["interior_min"] = json_number(s.interior_min);
    j["sup_norm"] = json_number(s.sup_norm);
    j["operator_residual"] =
        s.operator_residual ? json_number(*s.operator_residual) : json(nullptr);
    return j;
}

struct TaskContext {
    const RunConfig& cfg;
    std::string out_dir;
    bool csv;  // emit CSV artifacts
    int precision;
    json report;
    std::vector<std::string> notes;

    std::string path(const std::string& name) const { return out_dir + "/" + name; }
};

void finish(TaskContext& ctx, const std::string& status) {
    ctx.report["status"] = status;
    ctx.report["notes"] = ctx.notes;
    std::ofstream out(ctx.path("report.json"), std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + ctx.path("report.json"));
    out << ctx.report.dump(2) << '\n';
}

int exit_for_verdict(Verdict v) {
    return (v == Verdict::Pass || v == Verdict::PassAdvisory) ? 0 : 2;
}

int run_check(TaskContext& ctx, const ProblemSpec& p) {
    HypothesisReport rep = check_all(p, check_options(ctx.cfg.task));
    ctx.report["hypotheses"] = to_json(rep);
    std::cout << pretty_text(rep);
    const int code = exit_for_verdict(rep.overall);
    finish(ctx, code == 0 ? "ok" : "verdict-fail");
    return code;
}

int run_solve(TaskContext& ctx, const ProblemSpec& p, int threads) {
    HypothesisReport rep = check_all(p, check_options(ctx.cfg.task));
    ctx.report["hypotheses"] = to_json(rep);
    std::cout << pretty_text(rep);
    if (exit_for_verdict(rep.overall) != 0) {
        ctx.notes.push_back("hypotheses not satisfied; shooting skipped");
        finish(ctx, "verdict-fail");
        return 2;
    }

    ShootingOptions sopt = shooting_options(ctx.cfg.task, threads);
    const int quad_n = static_cast<int>(get_param(ctx.cfg.task.params, "quad-n", 1024));
    try {
        SolveResult sr = find_positive_solutions(p, sopt);
        for (auto& s : sr.solutions) s.operator_residual = operator_residual(p, s, quad_n);

        json sols = json::array();
        for (const auto& s : sr.solutions) sols.push_back(solution_summary(s));
        ctx.report["solutions"] = std::move(sols);
        ctx.report["scan_points"] = sr.scan.size();
        ctx.notes.insert(ctx.notes.end(), sr.notes.begin(), sr.notes.end());

        if (ctx.csv) {
            write_poincare_csv(ctx.path("poincare.csv"), sr.scan, ctx.precision);
            for (std::size_t i = 0; i < sr.solutions.size(); ++i)
                write_profile_csv(ctx.path("solution_" + std::to_string(i) + ".csv"),
                                  sr.solutions[i], ctx.precision);
        }
        for (const auto& s : sr.solutions)
            std::cout << "solution: c = " << format_double(s.initial_slope, 12)
                      << ", |u(L)| = " << format_double(s.boundary_residual, 3)
                      << ", interior min = " << format_double(s.interior_min, 3)
                      << ", sup = " << format_double(s.sup_norm, 6) << '\n';

        if (sr.solutions.empty()) {
            ctx.notes.push_back("brackets found but every root was rejected");
            finish(ctx, "error");
            return 1;
        }
        finish(ctx, "ok");
        return 0;
    } catch (const NoBracketFound& e) {
        ctx.notes.push_back(e.what());
        ctx.report["solutions"] = json::array();
        if (ctx.csv) write_poincare_csv(ctx.path("poincare.csv"), e.scan, ctx.precision);
        std::cout << "no bracket: " << e.what() << " (widen [c-min, c-max])\n";
        finish(ctx, "error");
        return 1;
    }
}

int run_poincare(TaskContext& ctx, const ProblemSpec& p, int threads) {
    ShootingOptions sopt = shooting_options(ctx.cfg.task, threads);
    std::vector<double> cs(sopt.n_scan);
    for (int i = 0; i < sopt.n_scan; ++i)
        cs[i] = sopt.c_min + (sopt.c_max - sopt.c_min) * i / (sopt.n_scan - 1);
    auto pts = sample_poincare(p, cs, sopt);

    std::size_t escapes = 0;
    for (const auto& pt : pts) escapes += pt.escaped ? 1 : 0;
    ctx.report["points"] = pts.size();
    ctx.report["escaped"] = escapes;
    ctx.report["c_min"] = json_number(sopt.c_min);
    ctx.report["c_max"] = json_number(sopt.c_max);
    if (ctx.csv) write_poincare_csv(ctx.path("poincare.csv"), pts, ctx.precision);
    std::cout << "poincare: " << pts.size() << " samples, " << escapes << " escaped\n";
    finish(ctx, "ok");
    return 0;
}

int run_eigen(TaskContext& ctx, const ProblemSpec& p) {
    CheckOptions copt = check_options(ctx.cfg.task);
    EigenOptions eopt;
    eopt.tol = copt.tol;

    const Interval full{0.0, p.weight.length()};
    json full_j;
    for (auto [kind, name] : {std::pair{WeightKind::PositivePart, "positive-part"},
                              std::pair{WeightKind::NegativePart, "negative-part"},
                              std::pair{WeightKind::AbsoluteValue, "absolute-value"}}) {
        try {
            full_j[name] = to_json(first_eigenvalue(p.weight, full, kind, eopt));
        } catch (const Error& e) {
            full_j[name] = json(nullptr);
            ctx.notes.push_back(std::string(name) + ": " + e.what());
        }
    }
    ctx.report["full_interval"] = std::move(full_j);

    json per_interval = json::array();
    try {
        SignPartition part = p.weight.partition() ? *p.weight.partition()
                                                  : detect_sign_partition(p.weight, copt.partition);
        int idx = 0;
        for (const Interval& iv : part.intervals) {
            EigenResult r = first_eigenvalue(p.weight, iv, WeightKind::PositivePart, eopt);
            per_interval.push_back(to_json(r));
            if (ctx.csv) {
                SolutionProfile phi = eigenfunction(p.weight, r);
                write_profile_csv(ctx.path("eigenfunction_interval_" + std::to_string(idx) +
                                           ".csv"),
                                  phi, ctx.precision);
            }
            ++idx;
        }
    } catch (const Error& e) {
        ctx.notes.push_back(std::string("per-interval eigenvalues: ") + e.what());
    }
    ctx.report["per_interval"] = std::move(per_interval);
    std::cout << ctx.report["full_interval"].dump(2) << '\n';
    finish(ctx, "ok");
    return 0;
}

int run_lambda_scan(TaskContext& ctx, const ProblemSpec& p) {
    CheckOptions copt = check_options(ctx.cfg.task);
    std::vector<double> scales;
    if (ctx.cfg.task.params.count("scales")) {
        scales = get_param_list(ctx.cfg.task.params, "scales");
    }

    LambdaScanResult res = lambda_threshold_scan(p, scales, copt);
    if (scales.empty()) {
        if (!(res.lambda_star > 0.0))
            throw ConfigError("lambda-scan: provide task.scales (lambda_star is 0 here)");
        for (double m : {0.25, 0.5, 0.8, 0.95, 1.05, 1.25, 2.0, 4.0})
            scales.push_back(m * res.lambda_star);
        res = lambda_threshold_scan(p, scales, copt);
    }

    ctx.report["lambda_star"] = json_number(res.lambda_star);
    json pts = json::array();
    std::ostringstream csv;
    csv << "scale,h4_verdict,min_margin\n";
    for (const auto& pt : res.points) {
        json j;
        j["scale"] = json_number(pt.scale);
        j["h4"] = to_string(pt.h4);
        j["min_margin"] = json_number(pt.min_margin);
        pts.push_back(std::move(j));
        csv << format_double(pt.scale, ctx.precision) << ',' << to_string(pt.h4) << ','
            << format_double(pt.min_margin, ctx.precision) << '\n';
    }
    ctx.report["points"] = std::move(pts);
    if (ctx.csv) {
        std::ofstream out(ctx.path("lambda_scan.csv"), std::ios::binary | std::ios::trunc);
        out << csv.str();
    }
    std::cout << "lambda_star = " << format_double(res.lambda_star, 12) << '\n';
    finish(ctx, "ok");
    return 0;
}

int run_radial(TaskContext& ctx, const RadialProblem& rp, int threads) {
    CheckOptions copt = check_options(ctx.cfg.task);
    ShootingOptions sopt = shooting_options(ctx.cfg.task, threads);
    const int n_samples = static_cast<int>(get_param(ctx.cfg.task.params, "n-samples", 1025));

    try {
        RadialSolveResult res = solve_radial(rp, sopt, copt, n_samples);
        ctx.report["transformed_length"] = json_number(res.transformed.length);
        ctx.report["hypotheses"] = to_json(res.hypotheses);
        std::cout << pretty_text(res.hypotheses);
        ctx.notes.insert(ctx.notes.end(), res.notes.begin(), res.notes.end());

        json sols = json::array();
        for (const auto& s : res.solutions) {
            json j;
            j["c"] = json_number(s.line.initial_slope);
            j["boundary_residual"] = json_number(s.boundary_residual);
            j["interior_min"] = json_number(s.interior_min);
            j["sup_norm"] = json_number(s.sup_norm);
            sols.push_back(std::move(j));
        }
        ctx.report["solutions"] = std::move(sols);

        if (exit_for_verdict(res.hypotheses.overall) != 0) {
            finish(ctx, "verdict-fail");
            return 2;
        }
        if (ctx.csv) {
            write_poincare_csv(ctx.path("poincare.csv"), res.scan, ctx.precision);
            for (std::size_t i = 0; i < res.solutions.size(); ++i) {
                write_radial_csv(ctx.path("radial_solution_" + std::to_string(i) + ".csv"),
                                 res.solutions[i].samples, ctx.precision);
                write_profile_csv(ctx.path("line_solution_" + std::to_string(i) + ".csv"),
                                  res.solutions[i].line, ctx.precision);
            }
        }
        for (const auto& s : res.solutions)
            std::cout << "radial solution: v'(0) = " << format_double(s.line.initial_slope, 12)
                      << ", |w(r2)| = " << format_double(s.boundary_residual, 3)
                      << ", sup = " << format_double(s.sup_norm, 6) << '\n';
        if (res.solutions.empty()) {
            ctx.notes.push_back("no solution accepted");
            finish(ctx, "error");
            return 1;
        }
        finish(ctx, "ok");
        return 0;
    } catch (const NoBracketFound& e) {
        ctx.notes.push_back(e.what());
        if (ctx.csv) write_poincare_csv(ctx.path("poincare.csv"), e.scan, ctx.precision);
        finish(ctx, "error");
        return 1;
    }
}

}  // namespace

int run(const RunConfig& cfg_in, const RunOverrides& ov) {
    RunConfig cfg = cfg_in;
    if (ov.task) {
        if (!std::set<std::string>{"check", "solve", "poincare", "eigen", "radial",
                                   "lambda-scan"}
                 .count(*ov.task))
            throw ConfigError("unknown task '" + *ov.task + "'");
        cfg.task.name = *ov.task;
    }
    if (ov.out_dir) cfg.output.dir = *ov.out_dir;
    if (ov.format) {
        if (*ov.format != "csv" && *ov.format != "json" && *ov.format != "both")
            throw ConfigError("format must be csv, json, or both");
        cfg.output.format = *ov.format;
    }
    if (ov.tol) {
        // the task's primary tolerance
        const std::string key = (cfg.task.name == "solve" || cfg.task.name == "radial")
                                    ? "tol-bvp"
                                    : (cfg.task.name == "poincare" ? "tol-ode" : "tol");
        cfg.task.params[key] = format_double(*ov.tol, 17);
    }
    int threads = static_cast<int>(get_param(cfg.task.params, "threads", 1));
    if (ov.threads) threads = *ov.threads;
    if (threads < 1) threads = 1;

    fs::create_directories(cfg.output.dir);

    TaskContext ctx{cfg,
                    cfg.output.dir,
                    cfg.output.format != "json",
                    cfg.output.precision,
                    json::object(),
                    {}};
    ctx.report["task"] = cfg.task.name;
    ctx.report["problem"] = problem_json(cfg.problem);

    const std::string& task = cfg.task.name;
    const bool radial_problem = cfg.problem.kind == "radial";
    if (task == "radial") {
        if (!radial_problem) throw ConfigError("task radial requires problem.kind = radial");
        return run_radial(ctx, build_radial_problem(cfg.problem, cfg.base_dir), threads);
    }
    ProblemSpec p = radial_problem
                        ? reduce(build_radial_problem(cfg.problem, cfg.base_dir)).line
                        : build_line_problem(cfg.problem, cfg.base_dir);
    if (task == "check") return run_check(ctx, p);
    if (task == "solve") return run_solve(ctx, p, threads);
    if (task == "poincare") return run_poincare(ctx, p, threads);
    if (task == "eigen") return run_eigen(ctx, p);
    if (task == "lambda-scan") return run_lambda_scan(ctx, p);
    throw ConfigError("unknown task '" + task + "'");
}

int run_config_file(const std::string& path, const RunOverrides& ov) {
    try {
        return run(parse_config_file(path), ov);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace posbvp
