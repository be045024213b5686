#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "nchyl/commands.hpp"
#include "nchyl/version.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Relativistic bound states of the modified Hylleraas well with "
                 "noncommutative-geometry and weak-field corrections"};
    app.set_version_flag("--version", nchyl::kVersion);
    app.require_subcommand(1);

    std::string config_path, out_dir = "out";
    bool seedless = true;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "configuration file")->required();
        sub->add_option("--out", out_dir, "output directory");
        sub->add_flag("--seedless,!--no-seedless", seedless,
                      "fully deterministic outputs (default on)");
    };

    CLI::App* solve = app.add_subcommand("solve", "bound-state table: closed-form conditions vs oracle");
    add_common(solve);
    CLI::App* correct = app.add_subcommand("correct", "first-order theta and field corrections");
    add_common(correct);
    CLI::App* validate = app.add_subcommand("validate", "run every invariant suite and emit the report");
    add_common(validate);

    CLI::App* scan = app.add_subcommand("scan", "sweep one parameter and tabulate E and dE");
    add_common(scan);
    std::string axis;
    double lo = 0.0, hi = 0.0;
    int steps = 0;
    scan->add_option("--axis", axis, "theta | V0 | alpha | q | r_c")->required();
    scan->add_option("--lo", lo, "range start")->required();
    scan->add_option("--hi", hi, "range end")->required();
    scan->add_option("--steps", steps, "number of panels")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        nchyl::io::RunConfig cfg = nchyl::io::parse_config_file(config_path);
        if (solve->parsed())
            return nchyl::io::cmd_solve(cfg, out_dir);
        if (correct->parsed())
            return nchyl::io::cmd_correct(cfg, out_dir);
        if (validate->parsed())
            return nchyl::io::cmd_validate(cfg, out_dir);
        if (scan->parsed())
            return nchyl::io::cmd_scan(cfg, out_dir, axis, lo, hi, steps);
    } catch (const nchyl::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return nchyl::io::kExitConfigError;
    } catch (const nchyl::Error& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return nchyl::io::kExitSolverFailure;
    }
    return nchyl::io::kExitOk;
}
