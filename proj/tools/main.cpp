#include <CLI11.hpp>

#include "posbvp/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"positive solutions of u'' + a(x) g(u) = 0 with sign-changing weight"};

    std::string config_path;
    posbvp::RunOverrides ov;
    std::string task, out_dir, format;
    double tol = 0.0;
    int threads = 0;

    app.add_option("--config", config_path, "config file (sections problem/task/output)")
        ->required();
    app.add_option("--task", task, "override the configured task "
                                   "(check|solve|poincare|eigen|radial|lambda-scan)");
    app.add_option("--out", out_dir, "override the output directory");
    app.add_option("--tol", tol, "override the task's primary tolerance");
    app.add_option("--threads", threads, "worker threads for Poincare sampling");
    app.add_option("--format", format, "artifact formats: csv|json|both");

    CLI11_PARSE(app, argc, argv);

    if (!task.empty()) ov.task = task;
    if (!out_dir.empty()) ov.out_dir = out_dir;
    if (tol > 0.0) ov.tol = tol;
    if (threads > 0) ov.threads = threads;
    if (!format.empty()) ov.format = format;

    return posbvp::run_config_file(config_path, ov);
}
