// Command-line driver: time sweeps of the nonclassicality indicators over the
// figure presets (or a custom key=value config), written as CSV.
//
//   lambdajc sweep --preset a-down --out series.csv
//   lambdajc sweep --config model.cfg --tau-end 20 --tau-steps 200 --out x.csv
//   lambdajc sweep --preset b-down --phase-snapshot 10 --out phase.csv
//   lambdajc presets
//
// Exit codes: 0 ok, 2 configuration error, 3 numerical failure, 4 I/O error.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lambdajc/lambdajc.hpp"

namespace {

struct CliOptions {
    std::string preset;
    std::string config_path;
    double tau_start = 0.0;
    double tau_end = 50.0;
    int tau_steps = 500;
    std::string out = "sweep.csv";
    bool verify = false;
    double detuning = 5.0;
    bool no_free_phases = false;
    std::optional<double> phase_snapshot_tau;
    int m_pts = 128;
    double theta0 = -std::numbers::pi;
};

int run(const CliOptions& opt, const CLI::App& sweep_cmd) {
    lambdajc::SweepSpec spec;
    spec.tau_start = opt.tau_start;
    spec.tau_end = opt.tau_end;
    spec.tau_steps = opt.tau_steps;
    spec.m_pts = opt.m_pts;
    spec.theta0 = opt.theta0;
    spec.out_path = opt.out;
    spec.verify = opt.verify;

    if (!opt.preset.empty()) {
        spec.preset = lambdajc::canonical_preset_name(opt.preset);
        spec.config = lambdajc::make_preset(opt.preset, opt.detuning);
    } else {
        // File values apply wherever the corresponding flag was not given.
        const lambdajc::FileConfig fc = lambdajc::parse_config_file(opt.config_path);
        spec.config = fc.model;
        const auto given = [&](const std::string& flag) {
            return sweep_cmd.get_option(flag)->count() > 0;
        };
        if (fc.tau_start && !given("--tau-start")) spec.tau_start = *fc.tau_start;
        if (fc.tau_end && !given("--tau-end")) spec.tau_end = *fc.tau_end;
        if (fc.tau_steps && !given("--tau-steps")) spec.tau_steps = *fc.tau_steps;
        if (fc.m_pts && !given("--m-pts")) spec.m_pts = *fc.m_pts;
        if (fc.theta0 && !given("--theta0")) spec.theta0 = *fc.theta0;
        if (fc.out && !given("--out")) spec.out_path = *fc.out;
    }
    if (opt.no_free_phases) spec.config.include_free_phases = false;

    if (opt.phase_snapshot_tau) {
        lambdajc::dump_phase_snapshot(spec, *opt.phase_snapshot_tau);
        std::cout << "wrote phase snapshot at tau=" << *opt.phase_snapshot_tau
                  << " to " << spec.out_path << "\n";
        return 0;
    }
    if (spec.verify) std::cout << "verifying against the reduced-scale oracle...\n";
    lambdajc::run_sweep(spec);
    std::cout << "wrote " << spec.tau_steps << " samples to " << spec.out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lambda-type three-level atom in a two-mode Kerr cavity: "
                 "nonclassicality indicator sweeps"};
    app.require_subcommand(1);

    CliOptions opt;
    CLI::App* sweep = app.add_subcommand("sweep", "run a time sweep and write CSV");
    auto* preset_opt =
        sweep->add_option("--preset", opt.preset,
                          "figure preset (a-up, a-down, b-up, b-down, c-up, c-down)");
    auto* config_opt =
        sweep->add_option("--config", opt.config_path, "key=value config file");
    preset_opt->excludes(config_opt);
    sweep->add_option("--tau-start", opt.tau_start, "first scaled-time sample");
    sweep->add_option("--tau-end", opt.tau_end, "last scaled-time sample");
    sweep->add_option("--tau-steps", opt.tau_steps, "number of samples (>= 2)");
    sweep->add_option("--out", opt.out, "output CSV path");
    sweep->add_flag("--verify", opt.verify,
                    "cross-check against the reduced-scale RK4 oracle first");
    sweep->add_option("--detuning", opt.detuning,
                      "detuning used by the c presets (units of lambda)");
    sweep->add_flag("--no-free-phases", opt.no_free_phases,
                    "drop the e^{-i gamma t} free-evolution phases");
    sweep->add_option("--phase-snapshot", opt.phase_snapshot_tau,
                      "write the phase distribution at this tau instead of a sweep");
    sweep->add_option("--m-pts", opt.m_pts, "phase mesh points per axis");
    sweep->add_option("--theta0", opt.theta0, "phase window origin (rad)");

    CLI::App* presets = app.add_subcommand("presets", "list preset names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (presets->parsed()) {
            for (const std::string& name : lambdajc::preset_names())
                std::cout << name << "\n";
            return 0;
        }
        if (opt.preset.empty() && opt.config_path.empty())
            throw lambdajc::ConfigError("one of --preset or --config is required");
        return run(opt, *sweep);
    } catch (const lambdajc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const lambdajc::TruncationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const lambdajc::ResolutionError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const lambdajc::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
}
