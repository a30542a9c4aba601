#include "swarmsim/commands.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "swarmsim/csv.hpp"
#include "swarmsim/manifest.hpp"
#include "swarmsim/presets.hpp"
#include "swarmsim/svg_plot.hpp"

namespace swarmsim {

namespace fs = std::filesystem;

std::filesystem::path resolve_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("SWARM_OUT_DIR"); env && *env) return env;
    return ".";
}

std::vector<std::uint64_t> parse_seeds_spec(const std::string& spec) {
    const auto parse_one = [](const std::string& s) {
        std::size_t consumed = 0;
        long long v = 0;
        try {
            v = std::stoll(s, &consumed);
        } catch (const std::exception&) {
            consumed = std::string::npos;
        }
        if (consumed != s.size() || v < 0) {
            throw std::invalid_argument("invalid seed value: '" + s + "'");
        }
        return static_cast<std::uint64_t>(v);
    };

    if (const auto dots = spec.find(".."); dots != std::string::npos) {
        const std::uint64_t lo = parse_one(spec.substr(0, dots));
        const std::uint64_t hi = parse_one(spec.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument("invalid seed range: '" + spec + "'");
        std::vector<std::uint64_t> seeds;
        for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
        return seeds;
    }
    if (spec.find(',') != std::string::npos) {
        std::vector<std::uint64_t> seeds;
        std::istringstream in(spec);
        std::string item;
        while (std::getline(in, item, ',')) {
            if (!item.empty()) seeds.push_back(parse_one(item));
        }
        if (seeds.empty()) throw std::invalid_argument("empty seed list: '" + spec + "'");
        return seeds;
    }
    const std::uint64_t count = parse_one(spec);
    if (count == 0) throw std::invalid_argument("seed count must be positive");
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = 1; s <= count; ++s) seeds.push_back(s);
    return seeds;
}

void write_chromosome_document(const std::filesystem::path& path, const Evaluation& eval) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << "# swarmsim chromosome\n";
    const GeneSpecs specs = default_gene_specs();
    for (int j = 0; j < kGeneCount; ++j) {
        out << specs[static_cast<std::size_t>(j)].name << " = "
            << format_real(eval.chromosome.genes[static_cast<std::size_t>(j)]) << "\n";
    }
    out << "targets_reached = " << eval.targets_reached << "\n";
    out << "connectivity = " << format_real(eval.connectivity) << "\n";
    out << "fitness = " << format_real(eval.fitness) << "\n";
}

Chromosome read_chromosome_document(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open chromosome file: " + path.string());

    const GeneSpecs specs = default_gene_specs();
    std::map<std::string, int> gene_index;
    for (int j = 0; j < kGeneCount; ++j) gene_index[specs[static_cast<std::size_t>(j)].name] = j;

    Chromosome c;
    std::array<bool, kGeneCount> seen{};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed.front() == '#') continue;
        const auto eq = trimmed.find('=');
        const std::string location = path.string() + ":" + std::to_string(line_no);
        if (eq == std::string::npos) {
            throw ConfigError(location + ": expected 'key = value'");
        }
        std::string key = trimmed.substr(0, eq);
        key.erase(key.find_last_not_of(" \t") + 1);
        std::string value = trimmed.substr(eq + 1);
        value.erase(0, value.find_first_not_of(" \t"));
        value.erase(value.find_last_not_of(" \t") + 1);

        if (key == "targets_reached" || key == "connectivity" || key == "fitness") continue;
        const auto it = gene_index.find(key);
        if (it == gene_index.end()) throw ConfigError(location + ": unknown key '" + key + "'");
        try {
            std::size_t consumed = 0;
            c.genes[static_cast<std::size_t>(it->second)] = std::stod(value, &consumed);
            if (consumed != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw ConfigError(location + ": expected a number, got '" + value + "'");
        }
        seen[static_cast<std::size_t>(it->second)] = true;
    }
    for (int j = 0; j < kGeneCount; ++j) {
        if (!seen[static_cast<std::size_t>(j)]) {
            throw ConfigError(path.string() + ": missing gene '" +
                              specs[static_cast<std::size_t>(j)].name + "'");
        }
    }
    return c;
}

namespace {

DEConfig load_or_default(const std::string& config_path) {
    if (config_path.empty()) return DEConfig{};
    if (!fs::exists(config_path)) {
        throw ConfigError("config file not found: " + config_path);
    }
    return load_config_file(config_path);
}

double wall_seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int cmd_sim(const SimOptions& opt, std::ostream& diag) {
    const auto started = std::chrono::steady_clock::now();
    if (!opt.config_path.empty() && !fs::exists(opt.config_path)) {
        diag << "error: config file not found: " << opt.config_path << "\n";
        return kExitMissingFile;
    }
    try {
        DEConfig cfg = load_or_default(opt.config_path);
        if (!opt.chromosome_path.empty()) {
            if (!fs::exists(opt.chromosome_path)) {
                diag << "error: chromosome file not found: " << opt.chromosome_path << "\n";
                return kExitMissingFile;
            }
            const Chromosome c = read_chromosome_document(opt.chromosome_path);
            if (!c.within_bounds(cfg.genes)) {
                diag << "error: chromosome in " << opt.chromosome_path
                     << " violates the configured gene ranges\n";
                return kExitFailure;
            }
            apply_chromosome(c, cfg.sim.air, cfg.sim.ground);
        }
        if (opt.seed) cfg.sim.sim_seed = *opt.seed;
        if (opt.steps) cfg.sim.timesteps = *opt.steps;
        cfg.sim.validate();

        const fs::path out_dir = resolve_out_dir(opt.out_dir);
        fs::create_directories(out_dir);

        RunManifest manifest;
        manifest.version = kVersion;
        manifest.command = "sim";
        manifest.config_text = serialize_config(cfg);
        manifest.config_hash = fnv1a_hash(manifest.config_text);
        manifest.seeds = {cfg.sim.sim_seed};

        std::optional<CsvWriter> trajectory;
        StepObserver observer;
        if (opt.trajectory) {
            trajectory.emplace(out_dir / "trajectory.csv",
                               std::vector<std::string>{"step", "id", "kind", "x", "y", "vx", "vy"});
            observer = [&](int step, const std::vector<AgentState>& agents) {
                for (const auto& a : agents) {
                    trajectory->row({std::to_string(step), std::to_string(a.id),
                                     a.kind == AgentKind::Ground ? "ground" : "air",
                                     format_real(a.position.x), format_real(a.position.y),
                                     format_real(a.velocity.x), format_real(a.velocity.y)});
                }
            };
        }

        const SimMetrics metrics = run(cfg.sim, observer);

        CsvWriter metrics_csv(out_dir / "metrics.csv",
                              {"step", "largest_component", "targets_cumulative"});
        for (std::size_t i = 0; i < metrics.component_series.size(); ++i) {
            metrics_csv.row({std::to_string(i + 1), std::to_string(metrics.component_series[i]),
                             std::to_string(metrics.targets_series[i])});
        }
        metrics_csv.flush();

        manifest.artifacts.push_back("metrics.csv");
        if (trajectory) {
            trajectory->flush();
            manifest.artifacts.push_back("trajectory.csv");
        }
        manifest.wall_seconds = wall_seconds_since(started);
        write_manifest(out_dir / "manifest.json", manifest);

        diag << "sim: seed " << cfg.sim.sim_seed << ", " << cfg.sim.timesteps << " steps, N_T "
             << metrics.targets_reached << ", N_C " << format_real(metrics.connectivity)
             << ", fitness " << format_real(fitness(metrics, cfg)) << "\n";
        diag << "sim: wrote " << (out_dir / "metrics.csv").string() << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

namespace {

// Estimates one full evaluation by timing a truncated run of the scenario
// with mid-range genes.
double estimate_eval_seconds(const DEConfig& cfg) {
    SimConfig probe = cfg.sim;
    Chromosome mid;
    for (int j = 0; j < kGeneCount; ++j) {
        const auto& s = cfg.genes[static_cast<std::size_t>(j)];
        mid.genes[static_cast<std::size_t>(j)] = 0.5 * (s.min + s.max);
    }
    apply_chromosome(mid, probe.air, probe.ground);
    const int probe_steps = std::min(200, probe.timesteps);
    probe.timesteps = probe_steps;
    const auto t0 = std::chrono::steady_clock::now();
    run(probe);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return elapsed * static_cast<double>(cfg.sim.timesteps) / static_cast<double>(probe_steps);
}

}  // namespace

int cmd_evolve(const EvolveOptions& opt, std::ostream& diag) {
    const auto started = std::chrono::steady_clock::now();
    if (!opt.config_path.empty() && !fs::exists(opt.config_path)) {
        diag << "error: config file not found: " << opt.config_path << "\n";
        return kExitMissingFile;
    }
    try {
        DEConfig cfg = load_or_default(opt.config_path);
        if (opt.full_scale) {
            const DEConfig full = full_scale_config();
            cfg.population = full.population;
            cfg.generations = full.generations;
            cfg.sim.space = full.sim.space;
            cfg.sim.obstacles = full.sim.obstacles;
            cfg.sim.ground_count = full.sim.ground_count;
            cfg.sim.air_count = full.sim.air_count;
            cfg.sim.timesteps = full.sim.timesteps;
        }
        if (opt.steps) cfg.sim.timesteps = *opt.steps;
        if (opt.strict_eq9) cfg.strict_eq9 = true;
        cfg.validate();

        const std::string seeds_spec =
            !opt.seeds_spec.empty() ? opt.seeds_spec : (opt.full_scale ? "1..20" : "1");
        const std::vector<std::uint64_t> seeds = parse_seeds_spec(seeds_spec);

        const double evals_per_seed =
            static_cast<double>(cfg.population) * static_cast<double>(cfg.generations + 1);
        if (opt.estimate_only) {
            const double per_eval = estimate_eval_seconds(cfg);
            const int lanes = std::max(1, opt.parallel);
            const double total =
                per_eval * evals_per_seed * static_cast<double>(seeds.size()) / lanes;
            char line[160];
            std::snprintf(line, sizeof line,
                          "evolve estimate: %.3f s per evaluation, %.0f evaluations per seed, "
                          "%zu seed(s), parallel %d",
                          per_eval, evals_per_seed, seeds.size(), lanes);
            diag << line << "\n";
            std::snprintf(line, sizeof line, "evolve estimate: ~%.2f hours total (%.0f s)",
                          total / 3600.0, total);
            diag << line << "\n";
            return kExitOk;
        }

        const fs::path out_dir = resolve_out_dir(opt.out_dir);
        fs::create_directories(out_dir);

        RunManifest manifest;
        manifest.version = kVersion;
        manifest.command = "evolve";
        manifest.config_text = serialize_config(cfg);
        manifest.config_hash = fnv1a_hash(manifest.config_text);
        manifest.seeds = seeds;

        std::vector<std::vector<GenerationRecord>> per_seed_records;
        for (const std::uint64_t seed : seeds) {
            DEConfig seeded = cfg;
            seeded.de_seed = seed;

            const std::string gen_name = "generations_seed" + std::to_string(seed) + ".csv";
            CsvWriter gen_csv(out_dir / gen_name,
                              {"generation", "avg_fitness", "best_fitness", "best_nt", "best_nc",
                               "seconds"});
            const GenerationObserver observer = [&](const GenerationRecord& rec) {
                gen_csv.row({std::to_string(rec.generation), format_real(rec.avg_fitness),
                             format_real(rec.best_fitness), std::to_string(rec.best_targets),
                             format_real(rec.best_connectivity), format_real(rec.seconds)});
                gen_csv.flush();  // partial logs stay valid if interrupted
            };

            const EvolutionReport report = evolve(seeded, opt.parallel, observer);
            per_seed_records.push_back(report.generations);

            const std::string best_name = "best_seed" + std::to_string(seed) + ".txt";
            write_chromosome_document(out_dir / best_name, report.best);
            manifest.artifacts.push_back(gen_name);
            manifest.artifacts.push_back(best_name);

            diag << "evolve: seed " << seed << ", best fitness "
                 << format_real(report.best.fitness) << " (N_T " << report.best.targets_reached
                 << ", N_C " << format_real(report.best.connectivity) << ")\n";
        }

        CsvWriter aggregate(out_dir / "fitness_aggregate.csv",
                            {"generation", "mean_avg_fitness", "mean_best_fitness"});
        for (int g = 0; g < cfg.generations; ++g) {
            double sum_avg = 0.0;
            double sum_best = 0.0;
            for (const auto& records : per_seed_records) {
                sum_avg += records[static_cast<std::size_t>(g)].avg_fitness;
                sum_best += records[static_cast<std::size_t>(g)].best_fitness;
            }
            const double n = static_cast<double>(per_seed_records.size());
            aggregate.row({std::to_string(g + 1), format_real(sum_avg / n),
                           format_real(sum_best / n)});
        }
        aggregate.flush();
        manifest.artifacts.push_back("fitness_aggregate.csv");

        manifest.wall_seconds = wall_seconds_since(started);
        write_manifest(out_dir / "manifest.json", manifest);
        diag << "evolve: wrote " << manifest.artifacts.size() << " artifact(s) under "
             << out_dir.string() << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

int cmd_plot(const PlotOptions& opt, std::ostream& diag) {
    try {
        if (opt.inputs.empty()) {
            diag << "error: no input files\n";
            return kExitFailure;
        }
        std::vector<Series> avg_fitness, best_fitness, components, targets;
        for (const auto& input : opt.inputs) {
            if (!fs::exists(input)) {
                diag << "error: input file not found: " << input << "\n";
                return kExitMissingFile;
            }
            const CsvTable table = read_csv(input);
            if (table.rows.empty()) {
                throw std::runtime_error("no data rows in " + input);
            }
            const std::string label = fs::path(input).stem().string();
            if (table.header ==
                std::vector<std::string>{"generation", "avg_fitness", "best_fitness", "best_nt",
                                         "best_nc", "seconds"}) {
                Series avg{label, {}, {}};
                Series best{label, {}, {}};
                for (std::size_t r = 0; r < table.rows.size(); ++r) {
                    const double g = table.real(r, 0);
                    avg.xs.push_back(g);
                    avg.ys.push_back(table.real(r, 1));
                    best.xs.push_back(g);
                    best.ys.push_back(table.real(r, 2));
                }
                avg_fitness.push_back(std::move(avg));
                best_fitness.push_back(std::move(best));
            } else if (table.header == std::vector<std::string>{"step", "largest_component",
                                                                "targets_cumulative"}) {
                Series comp{label, {}, {}};
                Series targ{label, {}, {}};
                for (std::size_t r = 0; r < table.rows.size(); ++r) {
                    const double s = table.real(r, 0);
                    comp.xs.push_back(s);
                    comp.ys.push_back(table.real(r, 1));
                    targ.xs.push_back(s);
                    targ.ys.push_back(table.real(r, 2));
                }
                components.push_back(std::move(comp));
                targets.push_back(std::move(targ));
            } else {
                throw std::runtime_error("unrecognized csv header in " + input);
            }
        }

        const fs::path out_dir = resolve_out_dir(opt.out_dir);
        fs::create_directories(out_dir);

        RunManifest manifest;
        manifest.version = kVersion;
        manifest.command = "plot";
        manifest.config_hash = 0;

        if (!avg_fitness.empty()) {
            write_line_chart(out_dir / "fitness_avg.svg", "Average fitness per generation",
                             "generation", "average fitness", avg_fitness);
            write_line_chart(out_dir / "fitness_best.svg", "Best fitness per generation",
                             "generation", "best fitness", best_fitness);
            manifest.artifacts.push_back("fitness_avg.svg");
            manifest.artifacts.push_back("fitness_best.svg");
        }
        if (!components.empty()) {
            write_line_chart(out_dir / "components.svg", "Largest ground component over time",
                             "step", "agents in largest component", components);
            write_line_chart(out_dir / "targets.svg", "Targets reached over time", "step",
                             "cumulative targets", targets);
            manifest.artifacts.push_back("components.svg");
            manifest.artifacts.push_back("targets.svg");
        }
        write_manifest(out_dir / "manifest.json", manifest);

        for (const auto& name : manifest.artifacts) {
            diag << "plot: wrote " << (out_dir / name).string() << "\n";
        }
        return kExitOk;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

int cmd_validate_config(const std::string& config_path, std::ostream& diag) {
    try {
        if (!fs::exists(config_path)) {
            diag << "error: config file not found: " << config_path << "\n";
            return kExitMissingFile;
        }
        const DEConfig cfg = load_config_file(config_path);
        diag << "ok: " << config_path << " (" << cfg.sim.ground_count << " ground, "
             << cfg.sim.air_count << " air, " << cfg.sim.timesteps << " steps, population "
             << cfg.population << ", " << cfg.generations << " generations)\n";
        return kExitOk;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace swarmsim
