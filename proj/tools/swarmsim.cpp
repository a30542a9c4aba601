#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "swarmsim/commands.hpp"
#include "swarmsim/presets.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Air-ground swarm target-search simulator and optimizer"};
    app.set_version_flag("--version", std::string("swarmsim ") + swarmsim::kVersion);
    app.require_subcommand(1);

    swarmsim::SimOptions sim_opt;
    std::uint64_t sim_seed = 0;
    int sim_steps = 0;
    auto* sim = app.add_subcommand("sim", "Run one simulation and write metrics");
    sim->add_option("--config", sim_opt.config_path, "Scenario config file");
    sim->add_option("--chromosome", sim_opt.chromosome_path,
                    "Chromosome document to inject (e.g. an evolve best_seedN.txt)");
    auto* seed_flag = sim->add_option("--seed", sim_seed, "Simulation seed override");
    auto* steps_flag = sim->add_option("--steps", sim_steps, "Timestep count override");
    sim->add_option("--out", sim_opt.out_dir, "Output directory (default: $SWARM_OUT_DIR or .)");
    sim->add_flag("--trajectory", sim_opt.trajectory, "Also write per-step agent trajectories");

    swarmsim::EvolveOptions evo_opt;
    int evo_steps = 0;
    auto* evolve = app.add_subcommand("evolve", "Run the differential-evolution optimizer");
    evolve->add_option("--config", evo_opt.config_path, "Scenario config file");
    evolve->add_option("--seeds", evo_opt.seeds_spec,
                       "DE seeds: N for 1..N, a..b for a range, or a,b,c");
    auto* evo_steps_flag = evolve->add_option("--steps", evo_steps, "Timestep count override");
    evolve->add_option("--out", evo_opt.out_dir, "Output directory");
    evolve->add_option("--parallel", evo_opt.parallel, "Concurrent fitness evaluations")
        ->check(CLI::PositiveNumber);
    evolve->add_flag("--strict-eq9", evo_opt.strict_eq9,
                     "Plain binomial crossover without the forced donor index");
    evolve->add_flag("--full-scale", evo_opt.full_scale,
                     "Reference experiment scale (hours; see --estimate-only)");
    evolve->add_flag("--estimate-only", evo_opt.estimate_only,
                     "Print a runtime estimate instead of running");

    swarmsim::PlotOptions plot_opt;
    auto* plot = app.add_subcommand("plot", "Render SVG charts from generation logs or metrics");
    plot->add_option("inputs", plot_opt.inputs, "CSV files produced by sim or evolve")
        ->required();
    plot->add_option("--out", plot_opt.out_dir, "Output directory");

    std::string validate_path;
    auto* validate = app.add_subcommand("validate-config", "Parse and validate a config file");
    validate->add_option("--config", validate_path, "Scenario config file")->required();

    CLI11_PARSE(app, argc, argv);

    if (sim->parsed()) {
        if (*seed_flag) sim_opt.seed = sim_seed;
        if (*steps_flag) sim_opt.steps = sim_steps;
        return swarmsim::cmd_sim(sim_opt, std::cerr);
    }
    if (evolve->parsed()) {
        if (*evo_steps_flag) evo_opt.steps = evo_steps;
        return swarmsim::cmd_evolve(evo_opt, std::cerr);
    }
    if (plot->parsed()) return swarmsim::cmd_plot(plot_opt, std::cerr);
    if (validate->parsed()) return swarmsim::cmd_validate_config(validate_path, std::cerr);
    return swarmsim::kExitFailure;
}
