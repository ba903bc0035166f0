#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "mrac/mrac.h"

namespace {

namespace fs = std::filesystem;

// Process exit codes: 0 success, 2 parse/usage, 3 assumption violation,
// 4 divergence, 1 everything else. Invalid-argument failures surface as 2
// because they originate from user-supplied scenario content or flags.
int exit_code_for(int status) {
    switch (status) {
        case MRAC_OK: return 0;
        case MRAC_ERR_PARSE: return 2;
        case MRAC_ERR_INVALID: return 2;
        case MRAC_ERR_ASSUMPTION: return 3;
        case MRAC_ERR_DIVERGED: return 4;
        default: return 1;
    }
}

struct Overrides {
    std::string scheme;
    double dt = 0.0;       // 0 means "keep scenario value"
    double horizon = 0.0;  // 0 means "keep scenario value"
};

struct ScenarioHandle {
    mrac_scenario* ptr = nullptr;
    ~ScenarioHandle() { mrac_scenario_free(ptr); }
};

struct TraceHandle {
    mrac_trace* ptr = nullptr;
    ~TraceHandle() { mrac_trace_free(ptr); }
};

struct Text {
    char* ptr = nullptr;
    ~Text() { mrac_text_free(ptr); }
    std::string str() const { return ptr != nullptr ? std::string(ptr) : std::string(); }
};

// Loads a scenario and applies command-line overrides. Returns MRAC_OK or the
// failing status with `message` filled from mrac_last_error().
int load_with_overrides(const std::string& path, const Overrides& ov, ScenarioHandle& scn,
                        std::string& message) {
    int rc = mrac_scenario_load(path.c_str(), &scn.ptr);
    if (rc == MRAC_OK && !ov.scheme.empty())
        rc = mrac_scenario_set_scheme(scn.ptr, ov.scheme.c_str());
    if (rc == MRAC_OK && ov.dt > 0.0) rc = mrac_scenario_set_dt(scn.ptr, ov.dt);
    if (rc == MRAC_OK && ov.horizon > 0.0) rc = mrac_scenario_set_horizon(scn.ptr, ov.horizon);
    if (rc != MRAC_OK) message = mrac_last_error();
    return rc;
}

int report_error(const std::string& context, int status, const std::string& message) {
    std::cerr << "error: " << context << ": " << message << " [" << mrac_status_name(status)
              << "]\n";
    return exit_code_for(status);
}

int cmd_design(const std::string& path, const Overrides& ov, const std::string& out_path) {
    ScenarioHandle scn;
    std::string message;
    int rc = load_with_overrides(path, ov, scn, message);
    if (rc != MRAC_OK) return report_error(path, rc, message);

    mrac_design* design = nullptr;
    rc = mrac_design_compute(scn.ptr, &design);
    if (rc != MRAC_OK) return report_error(path, rc, mrac_last_error());

    Text text;
    rc = mrac_design_certificate(design, &text.ptr);
    mrac_design_free(design);
    if (rc != MRAC_OK) return report_error(path, rc, mrac_last_error());

    if (out_path.empty()) {
        std::cout << text.str();
        return 0;
    }
    fs::path out(out_path);
    std::error_code ec;
    if (out.has_parent_path()) fs::create_directories(out.parent_path(), ec);
    std::ofstream file(out_path);
    file << text.str();
    file.flush();
    if (!file) return report_error(out_path, MRAC_ERR_IO, "cannot write certificate");
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

int cmd_verify(const std::string& path, const Overrides& ov) {
    ScenarioHandle scn;
    std::string message;
    int rc = load_with_overrides(path, ov, scn, message);
    if (rc != MRAC_OK) return report_error(path, rc, message);

    Text report;
    int all_pass = 0;
    rc = mrac_verify(scn.ptr, &report.ptr, &all_pass);
    if (rc != MRAC_OK) return report_error(path, rc, mrac_last_error());
    std::cout << report.str();
    return all_pass != 0 ? 0 : 3;
}

struct RunTask {
    std::string path;
    std::string out_path;
    std::string label;
};

struct RunOutcome {
    int exit_code = 0;
    std::string stdout_line;
    std::string stderr_line;
};

RunOutcome run_one(const RunTask& task, const Overrides& ov, int stride) {
    RunOutcome outcome;
    ScenarioHandle scn;
    std::string message;
    int rc = load_with_overrides(task.path, ov, scn, message);
    if (rc != MRAC_OK) {
        outcome.exit_code = exit_code_for(rc);
        outcome.stderr_line = "error: " + task.path + ": " + message + " [" +
                              mrac_status_name(rc) + "]";
        return outcome;
    }

    TraceHandle trace;
    rc = mrac_run(scn.ptr, &trace.ptr);
    bool diverged = (rc == MRAC_ERR_DIVERGED);
    if (rc != MRAC_OK && !diverged) {
        outcome.exit_code = exit_code_for(rc);
        outcome.stderr_line = "error: " + task.path + ": " + std::string(mrac_last_error()) +
                              " [" + mrac_status_name(rc) + "]";
        return outcome;
    }

    // A diverged run still yields its partial trace; write and summarize it.
    int wrc = mrac_trace_write_csv(trace.ptr, task.out_path.c_str(), stride);
    if (wrc != MRAC_OK) {
        outcome.exit_code = exit_code_for(wrc);
        outcome.stderr_line = "error: " + task.out_path + ": " + std::string(mrac_last_error()) +
                              " [" + mrac_status_name(wrc) + "]";
        return outcome;
    }

    Text line;
    int mrc = mrac_trace_metrics_line(trace.ptr, &line.ptr);
    if (mrc != MRAC_OK) {
        outcome.exit_code = exit_code_for(mrc);
        outcome.stderr_line = "error: " + task.path + ": " + std::string(mrac_last_error()) +
                              " [" + mrac_status_name(mrc) + "]";
        return outcome;
    }

    outcome.stdout_line = task.label + ": " + line.str() + " -> " + task.out_path;
    if (diverged) {
        int flag = 0;
        double t_div = 0.0;
        mrac_trace_diverged(trace.ptr, &flag, &t_div);
        char when[64];
        std::snprintf(when, sizeof when, "%.6g", t_div);
        outcome.stderr_line = "error: " + task.path + ": simulation diverged at t=" +
                              when + "; partial trace written [diverged]";
        outcome.exit_code = exit_code_for(MRAC_ERR_DIVERGED);
    }
    return outcome;
}

int cmd_run(const std::vector<std::string>& paths, const Overrides& ov, int stride,
            const std::string& out_opt, int jobs) {
    // With one input --out names the CSV file; with several it names a
    // directory receiving <scenario-stem>.csv per input. Without --out the
    // traces land in the working directory, never next to the inputs.
    std::vector<RunTask> tasks;
    tasks.reserve(paths.size());
    std::error_code ec;
    if (paths.size() > 1 && !out_opt.empty()) fs::create_directories(out_opt, ec);
    for (const auto& p : paths) {
        RunTask task;
        task.path = p;
        task.label = fs::path(p).stem().string();
        if (out_opt.empty()) {
            task.out_path = task.label + ".csv";
        } else if (paths.size() == 1) {
            fs::path out(out_opt);
            if (out.has_parent_path()) fs::create_directories(out.parent_path(), ec);
            task.out_path = out_opt;
        } else {
            task.out_path = (fs::path(out_opt) / (task.label + ".csv")).string();
        }
        tasks.push_back(std::move(task));
    }

    std::vector<RunOutcome> outcomes(tasks.size());
    int workers = std::min<int>(jobs, static_cast<int>(tasks.size()));
    if (workers <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) outcomes[i] = run_one(tasks[i], ov, stride);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    outcomes[i] = run_one(tasks[i], ov, stride);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    // Results print in input order regardless of completion order.
    int exit_code = 0;
    for (const auto& outcome : outcomes) {
        if (!outcome.stdout_line.empty()) std::cout << outcome.stdout_line << "\n";
        if (!outcome.stderr_line.empty()) std::cerr << outcome.stderr_line << "\n";
        if (exit_code == 0 && outcome.exit_code != 0) exit_code = outcome.exit_code;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mracsim: adaptive output-tracking designer, verifier, and simulator"};
    app.require_subcommand(1);

    Overrides ov;
    std::string out_path;
    std::vector<std::string> run_paths;
    std::string design_path;
    std::string verify_path;
    int stride = 10;
    int jobs = 1;

    auto add_scheme = [&](CLI::App* cmd) {
        cmd->add_option("--scheme", ov.scheme,
                        "Override the scenario scheme (SFB_XM, SFB_YM, OFB_XM, OFB_YM)");
    };

    CLI::App* design = app.add_subcommand("design", "Solve the matching design, print a certificate");
    design->add_option("scenario", design_path, "Scenario file")->required();
    add_scheme(design);
    design->add_option("--out", out_path, "Write the certificate to this file instead of stdout");

    CLI::App* run = app.add_subcommand("run", "Simulate the closed loop, write a CSV trace");
    run->add_option("scenarios", run_paths, "Scenario file(s)")->required();
    add_scheme(run);
    run->add_option("--out", out_path,
                    "Output CSV path (with several scenarios: output directory)");
    run->add_option("--stride", stride, "Write every Nth sample (default 10)")
        ->check(CLI::PositiveNumber);
    run->add_option("--dt", ov.dt, "Override the integration step")->check(CLI::PositiveNumber);
    run->add_option("--horizon", ov.horizon, "Override the simulated duration")
        ->check(CLI::PositiveNumber);
    run->add_option("--jobs", jobs, "Run scenarios on N worker threads")
        ->check(CLI::PositiveNumber);

    CLI::App* verify = app.add_subcommand("verify", "Re-derive and check the design, print a report");
    verify->add_option("scenario", verify_path, "Scenario file")->required();
    add_scheme(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (design->parsed()) return cmd_design(design_path, ov, out_path);
    if (verify->parsed()) return cmd_verify(verify_path, ov);
    return cmd_run(run_paths, ov, stride, out_path, jobs);
}
