#include "cancelfield_cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace cancelfield::cli;

    CLI::App app{"cancelfield: cancellation-field verification and boundary-layer solver"};
    app.require_subcommand(1, 1);

    RunConfig run;
    std::string config;
    std::string out;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config, "TOML configuration file")->check(CLI::ExistingFile);
        sub->add_option("--out", out, "output directory (default: [output] directory, else ./out)");
        sub->add_option("--verbose", run.verbosity, "report detail, 0-2")->check(CLI::Range(0, 2));
        sub->add_option("--seed", run.seed, "seed for randomized probe points")->capture_default_str();
    };

    std::vector<std::pair<Command, CLI::App*>> subs;
    for (auto c : {Command::verify_symbolic, Command::solve, Command::verify_numeric, Command::convergence,
                   Command::radius_check, Command::report}) {
        auto* sub = app.add_subcommand(std::string(to_string(c)));
        add_common(sub);
        if (c == Command::verify_symbolic || c == Command::report) {
            sub->add_flag("--negative-controls", run.negative_controls, "also run the cases that must fail");
        }
        subs.emplace_back(c, sub);
    }
    subs[1].second->description("run the boundary-layer solver");
    subs[0].second->description("prove the cancellation identities symbolically");
    subs[2].second->description("exact-mode identities, case gates and commutator cancellation");
    subs[3].second->description("grid convergence orders of the identities and the solver");
    subs[4].second->description("radius inequality check");
    subs[5].second->description("all verification commands in one report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kError;
    }

    for (const auto& [c, sub] : subs) {
        if (sub->parsed()) run.command = c;
    }
    if (!config.empty()) run.config_path = config;
    if (!out.empty()) run.output_dir = out;
    return execute(run, std::cout, std::cerr);
}
