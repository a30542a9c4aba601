#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "swarmsim/config.hpp"
#include "swarmsim/evolution.hpp"

namespace swarmsim {

/// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitMissingFile = 2;

/// Output root: explicit flag beats the SWARM_OUT_DIR environment variable
/// beats the current directory.
std::filesystem::path resolve_out_dir(const std::string& flag_value);

/// Seed list forms: "N" runs seeds 1..N, "a..b" an inclusive range,
/// "a,b,c" an explicit list. Throws std::invalid_argument on anything else.
std::vector<std::uint64_t> parse_seeds_spec(const std::string& spec);

/// Best-chromosome document: the 9 named gene values plus the evaluation.
void write_chromosome_document(const std::filesystem::path& path, const Evaluation& eval);

/// Reads the gene values back; the metric lines are ignored. Throws
/// ConfigError on unknown keys, malformed lines, or missing genes.
Chromosome read_chromosome_document(const std::filesystem::path& path);

struct SimOptions {
    std::string config_path;      // empty: reference defaults
    std::string chromosome_path;  // empty: config parameter values
    std::optional<std::uint64_t> seed;
    std::optional<int> steps;
    std::string out_dir;
    bool trajectory = false;
};

/// Runs one simulation; writes metrics.csv (step,largest_component,
/// targets_cumulative), optionally trajectory.csv, and manifest.json.
int cmd_sim(const SimOptions& opt, std::ostream& diag);

struct EvolveOptions {
    std::string config_path;
    std::string seeds_spec;  // empty: "1", or "1..20" under full_scale
    std::optional<int> steps;
    std::string out_dir;
    int parallel = 1;
    bool strict_eq9 = false;
    bool full_scale = false;
    bool estimate_only = false;
};

/// Runs the optimizer once per seed; writes generations_seed<S>.csv (flushed
/// per generation), best_seed<S>.txt, fitness_aggregate.csv, manifest.json.
/// With estimate_only, prints a runtime estimate and writes nothing.
int cmd_evolve(const EvolveOptions& opt, std::ostream& diag);

struct PlotOptions {
    std::vector<std::string> inputs;
    std::string out_dir;
};

/// Renders SVG charts from generation logs (fitness_avg.svg, fitness_best.svg)
/// and metrics files (components.svg, targets.svg), one polyline per input.
int cmd_plot(const PlotOptions& opt, std::ostream& diag);

/// Parses and validates a config file; prints a short summary.
int cmd_validate_config(const std::string& config_path, std::ostream& diag);

}  // namespace swarmsim
