#include "chtails/config.hpp"
#include "chtails/convergence.hpp"
#include "chtails/report.hpp"
#include "chtails/scenarios.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <string>

namespace {

void print_verdicts(const chtails::ExperimentReport& rep) {
    for (const auto& v : rep.verdicts)
        std::printf("[%s] %-28s measured=%.6g tolerance=%.6g  %s\n",
                    v.pass ? "PASS" : "FAIL", v.id.c_str(), v.measured, v.tolerance,
                    v.description.c_str());
}

int cmd_run(const std::string& path) {
    const chtails::RunConfig cfg = chtails::load_config(path);
    const chtails::ExperimentReport rep = chtails::run_experiment(cfg);
    print_verdicts(rep);
    const std::string dir = chtails::resolve_output_dir(cfg);
    for (const auto& p : chtails::write_outputs(rep, dir))
        std::printf("wrote %s\n", p.c_str());
    if (rep.partial) {
        std::fprintf(stderr, "%s (t = %.6g)\n", rep.error.c_str(), rep.trajectory.t_final);
        return 3;
    }
    return rep.all_pass() ? 0 : 1;
}

int cmd_validate(const std::string& path) {
    const chtails::RunConfig cfg = chtails::load_config(path);
    std::fputs(chtails::print_config(cfg).c_str(), stdout);
    return 0;
}

int cmd_list() {
    for (const auto& line : chtails::list_scenarios())
        std::printf("%s\n", line.c_str());
    return 0;
}

int cmd_convergence() {
    using namespace chtails;
    for (const auto& s : {operator_order_study(), temporal_order_study(),
                          spatial_order_study(), flow_residual_study()})
        std::fputs(format_study(s).c_str(), stdout);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tail-decay laboratory for the shallow-water peakon equation"};
    app.require_subcommand(1);

    std::string run_cfg, val_cfg;
    auto* run = app.add_subcommand("run", "run an experiment from a config file");
    run->add_option("config", run_cfg, "config file path")->required();
    auto* val = app.add_subcommand("validate", "parse a config and echo its canonical form");
    val->add_option("config", val_cfg, "config file path")->required();
    auto* lst = app.add_subcommand("list-scenarios", "list initial-data profiles");
    auto* cvg = app.add_subcommand("convergence", "run the self-convergence studies");

    try {
        app.parse(argc, argv);
        if (run->parsed()) return cmd_run(run_cfg);
        if (val->parsed()) return cmd_validate(val_cfg);
        if (lst->parsed()) return cmd_list();
        if (cvg->parsed()) return cmd_convergence();
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage problems are config errors
    } catch (const chtails::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
