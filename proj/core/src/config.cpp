#include "swarmsim/config.hpp"

#include <climits>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace swarmsim {

namespace {

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

double parse_real(const std::string& value, const std::string& context) {
    std::size_t consumed = 0;
    double result = 0.0;
    try {
        result = std::stod(value, &consumed);
    } catch (const std::exception&) {
        throw ConfigError(context + ": expected a number, got '" + value + "'");
    }
    if (consumed != value.size()) {
        throw ConfigError(context + ": expected a number, got '" + value + "'");
    }
    if (!std::isfinite(result)) throw ConfigError(context + ": value must be finite");
    return result;
}

long long parse_integer(const std::string& value, const std::string& context) {
    std::size_t consumed = 0;
    long long result = 0;
    try {
        result = std::stoll(value, &consumed);
    } catch (const std::exception&) {
        throw ConfigError(context + ": expected an integer, got '" + value + "'");
    }
    if (consumed != value.size()) {
        throw ConfigError(context + ": expected an integer, got '" + value + "'");
    }
    return result;
}

bool parse_bool(const std::string& value, const std::string& context) {
    if (value == "true") return true;
    if (value == "false") return false;
    throw ConfigError(context + ": expected true or false, got '" + value + "'");
}

std::string format_real_17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

DEConfig parse_config(std::string_view text, std::string_view source_name) {
    DEConfig cfg;
    cfg.sim.obstacles.clear();  // repopulated below: explicit list or default layout

    bool explicit_obstacles = false;
    std::vector<Obstacle> obstacle_list;

    using Setter = std::function<void(const std::string&, const std::string&)>;
    std::unordered_map<std::string, Setter> setters;

    const auto real_key = [&](const char* key, double* slot) {
        setters[key] = [slot](const std::string& v, const std::string& ctx) {
            *slot = parse_real(v, ctx);
        };
    };
    const auto int_key = [&](const char* key, int* slot) {
        setters[key] = [slot](const std::string& v, const std::string& ctx) {
            const long long parsed = parse_integer(v, ctx);
            if (parsed < INT_MIN || parsed > INT_MAX) throw ConfigError(ctx + ": out of range");
            *slot = static_cast<int>(parsed);
        };
    };
    const auto seed_key = [&](const char* key, std::uint64_t* slot) {
        setters[key] = [slot](const std::string& v, const std::string& ctx) {
            const long long parsed = parse_integer(v, ctx);
            if (parsed < 0) throw ConfigError(ctx + ": seed must be non-negative");
            *slot = static_cast<std::uint64_t>(parsed);
        };
    };
    const auto bool_key = [&](const char* key, bool* slot) {
        setters[key] = [slot](const std::string& v, const std::string& ctx) {
            *slot = parse_bool(v, ctx);
        };
    };

    real_key("space.length", &cfg.sim.space.length);
    real_key("space.width", &cfg.sim.space.width);
    int_key("sim.ground_count", &cfg.sim.ground_count);
    int_key("sim.air_count", &cfg.sim.air_count);
    int_key("sim.timesteps", &cfg.sim.timesteps);
    int_key("sim.required_touches", &cfg.sim.required_touches);
    real_key("sim.target_radius", &cfg.sim.target_radius);
    seed_key("sim.seed", &cfg.sim.sim_seed);
    real_key("connectivity.ground_direct_range", &cfg.sim.ground_direct_range);

    real_key("ground.vision_distance", &cfg.sim.ground.vision_distance);
    real_key("ground.vision_angle", &cfg.sim.ground.vision_angle);
    real_key("ground.obstacle_range", &cfg.sim.ground.obstacle_range);
    real_key("ground.target_range", &cfg.sim.ground.target_range);
    real_key("ground.separation_distance", &cfg.sim.ground.separation_distance);
    real_key("ground.speed", &cfg.sim.ground.speed);
    real_key("ground.cohesion_weight", &cfg.sim.ground.cohesion_weight);
    real_key("ground.alignment_weight", &cfg.sim.ground.alignment_weight);
    real_key("ground.separation_weight", &cfg.sim.ground.separation_weight);
    real_key("ground.obstacle_weight", &cfg.sim.ground.obstacle_weight);
    real_key("ground.target_weight", &cfg.sim.ground.target_weight);
    real_key("ground.cohesion_air_weight", &cfg.sim.ground.cohesion_air_weight);
    real_key("ground.alignment_air_weight", &cfg.sim.ground.alignment_air_weight);

    real_key("air.comm_range", &cfg.sim.air.comm_range);
    real_key("air.target_range", &cfg.sim.air.target_range);
    real_key("air.separation_distance", &cfg.sim.air.separation_distance);
    real_key("air.speed", &cfg.sim.air.speed);
    real_key("air.separation_weight", &cfg.sim.air.separation_weight);
    real_key("air.cohesion_air_weight", &cfg.sim.air.cohesion_air_weight);
    real_key("air.alignment_air_weight", &cfg.sim.air.alignment_air_weight);
    real_key("air.cohesion_ground_weight", &cfg.sim.air.cohesion_ground_weight);
    real_key("air.alignment_ground_weight", &cfg.sim.air.alignment_ground_weight);
    real_key("air.target_weight", &cfg.sim.air.target_weight);

    int_key("de.population", &cfg.population);
    int_key("de.generations", &cfg.generations);
    real_key("de.F", &cfg.weight_factor);
    real_key("de.CR", &cfg.crossover_rate);
    real_key("de.connectivity_weight", &cfg.connectivity_weight);
    real_key("de.targets_weight", &cfg.targets_weight);
    real_key("de.targets_scale", &cfg.targets_scale);
    seed_key("de.seed", &cfg.de_seed);
    bool_key("de.strict_eq9", &cfg.strict_eq9);

    for (auto& spec : cfg.genes) {
        real_key(("gene." + spec.name + ".min").c_str(), &spec.min);
        real_key(("gene." + spec.name + ".max").c_str(), &spec.max);
    }

    setters["obstacles"] = [&](const std::string& v, const std::string& ctx) {
        if (v == "none") {
            explicit_obstacles = true;
            obstacle_list.clear();
        } else if (v == "default") {
            explicit_obstacles = false;
            obstacle_list.clear();
        } else {
            throw ConfigError(ctx + ": expected none or default, got '" + v + "'");
        }
    };
    setters["obstacle"] = [&](const std::string& v, const std::string& ctx) {
        std::istringstream in(v);
        std::string sx, sy, sr, extra;
        if (!(in >> sx >> sy >> sr) || (in >> extra)) {
            throw ConfigError(ctx + ": expected 'obstacle = <x> <y> <radius>'");
        }
        explicit_obstacles = true;
        obstacle_list.push_back(
            {{parse_real(sx, ctx), parse_real(sy, ctx)}, parse_real(sr, ctx)});
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        const std::string_view raw =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        const auto eq = line.find('=');
        const std::string location = std::string(source_name) + ":" + std::to_string(line_no);
        if (eq == std::string::npos) {
            throw ConfigError(location + ": expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(location + ": missing key");
        if (value.empty()) throw ConfigError(location + ": missing value for '" + key + "'");

        const auto it = setters.find(key);
        if (it == setters.end()) throw ConfigError(location + ": unknown key '" + key + "'");
        it->second(value, location + ": " + key);
    }

    cfg.sim.obstacles =
        explicit_obstacles ? obstacle_list : SimConfig::default_obstacles(cfg.sim.space);

    try {
        cfg.validate();
        const Chromosome current = extract_chromosome(cfg.sim.air, cfg.sim.ground);
        for (int j = 0; j < kGeneCount; ++j) {
            const auto& s = cfg.genes[static_cast<std::size_t>(j)];
            const double v = current.genes[static_cast<std::size_t>(j)];
            if (!(v >= s.min && v <= s.max)) {
                throw std::invalid_argument("invalid config: " + s.name + " = " +
                                            format_real_17(v) + " outside gene range [" +
                                            format_real_17(s.min) + ", " + format_real_17(s.max) +
                                            "]");
            }
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string(source_name) + ": " + e.what());
    }
    return cfg;
}

DEConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), path);
}

std::string serialize_config(const DEConfig& cfg) {
    std::ostringstream out;
    const auto real_line = [&](const char* key, double v) {
        out << key << " = " << format_real_17(v) << "\n";
    };
    const auto int_line = [&](const char* key, long long v) { out << key << " = " << v << "\n"; };
    const auto bool_line = [&](const char* key, bool v) {
        out << key << " = " << (v ? "true" : "false") << "\n";
    };

    out << "# swarmsim scenario\n";
    real_line("space.length", cfg.sim.space.length);
    real_line("space.width", cfg.sim.space.width);
    int_line("sim.ground_count", cfg.sim.ground_count);
    int_line("sim.air_count", cfg.sim.air_count);
    int_line("sim.timesteps", cfg.sim.timesteps);
    int_line("sim.required_touches", cfg.sim.required_touches);
    real_line("sim.target_radius", cfg.sim.target_radius);
    int_line("sim.seed", static_cast<long long>(cfg.sim.sim_seed));
    real_line("connectivity.ground_direct_range", cfg.sim.ground_direct_range);

    out << "obstacles = none\n";
    for (const auto& o : cfg.sim.obstacles) {
        out << "obstacle = " << format_real_17(o.center.x) << " " << format_real_17(o.center.y)
            << " " << format_real_17(o.radius) << "\n";
    }

    real_line("ground.vision_distance", cfg.sim.ground.vision_distance);
    real_line("ground.vision_angle", cfg.sim.ground.vision_angle);
    real_line("ground.obstacle_range", cfg.sim.ground.obstacle_range);
    real_line("ground.target_range", cfg.sim.ground.target_range);
    real_line("ground.separation_distance", cfg.sim.ground.separation_distance);
    real_line("ground.speed", cfg.sim.ground.speed);
    real_line("ground.cohesion_weight", cfg.sim.ground.cohesion_weight);
    real_line("ground.alignment_weight", cfg.sim.ground.alignment_weight);
    real_line("ground.separation_weight", cfg.sim.ground.separation_weight);
    real_line("ground.obstacle_weight", cfg.sim.ground.obstacle_weight);
    real_line("ground.target_weight", cfg.sim.ground.target_weight);
    real_line("ground.cohesion_air_weight", cfg.sim.ground.cohesion_air_weight);
    real_line("ground.alignment_air_weight", cfg.sim.ground.alignment_air_weight);

    real_line("air.comm_range", cfg.sim.air.comm_range);
    real_line("air.target_range", cfg.sim.air.target_range);
    real_line("air.separation_distance", cfg.sim.air.separation_distance);
    real_line("air.speed", cfg.sim.air.speed);
    real_line("air.separation_weight", cfg.sim.air.separation_weight);
    real_line("air.cohesion_air_weight", cfg.sim.air.cohesion_air_weight);
    real_line("air.alignment_air_weight", cfg.sim.air.alignment_air_weight);
    real_line("air.cohesion_ground_weight", cfg.sim.air.cohesion_ground_weight);
    real_line("air.alignment_ground_weight", cfg.sim.air.alignment_ground_weight);
    real_line("air.target_weight", cfg.sim.air.target_weight);

    int_line("de.population", cfg.population);
    int_line("de.generations", cfg.generations);
    real_line("de.F", cfg.weight_factor);
    real_line("de.CR", cfg.crossover_rate);
    real_line("de.connectivity_weight", cfg.connectivity_weight);
    real_line("de.targets_weight", cfg.targets_weight);
    real_line("de.targets_scale", cfg.targets_scale);
    int_line("de.seed", static_cast<long long>(cfg.de_seed));
    bool_line("de.strict_eq9", cfg.strict_eq9);

    for (const auto& spec : cfg.genes) {
        real_line(("gene." + spec.name + ".min").c_str(), spec.min);
        real_line(("gene." + spec.name + ".max").c_str(), spec.max);
    }
    return out.str();
}

bool operator==(const Space& a, const Space& b) {
    return a.length == b.length && a.width == b.width;
}

bool operator==(const Obstacle& a, const Obstacle& b) {
    return a.center == b.center && a.radius == b.radius;
}

bool operator==(const GroundParams& a, const GroundParams& b) {
    return a.vision_distance == b.vision_distance && a.vision_angle == b.vision_angle &&
           a.obstacle_range == b.obstacle_range && a.target_range == b.target_range &&
           a.separation_distance == b.separation_distance && a.speed == b.speed &&
           a.cohesion_weight == b.cohesion_weight && a.alignment_weight == b.alignment_weight &&
           a.separation_weight == b.separation_weight && a.obstacle_weight == b.obstacle_weight &&
           a.target_weight == b.target_weight &&
           a.cohesion_air_weight == b.cohesion_air_weight &&
           a.alignment_air_weight == b.alignment_air_weight;
}

bool operator==(const AirParams& a, const AirParams& b) {
    return a.comm_range == b.comm_range && a.target_range == b.target_range &&
           a.separation_distance == b.separation_distance && a.speed == b.speed &&
           a.separation_weight == b.separation_weight &&
           a.cohesion_air_weight == b.cohesion_air_weight &&
           a.alignment_air_weight == b.alignment_air_weight &&
           a.cohesion_ground_weight == b.cohesion_ground_weight &&
           a.alignment_ground_weight == b.alignment_ground_weight &&
           a.target_weight == b.target_weight;
}

bool operator==(const SimConfig& a, const SimConfig& b) {
    return a.space == b.space && a.obstacles == b.obstacles && a.ground_count == b.ground_count &&
           a.air_count == b.air_count && a.timesteps == b.timesteps && a.ground == b.ground &&
           a.air == b.air && a.required_touches == b.required_touches &&
           a.target_radius == b.target_radius && a.sim_seed == b.sim_seed &&
           a.ground_direct_range == b.ground_direct_range;
}

bool operator==(const GeneSpec& a, const GeneSpec& b) {
    return a.name == b.name && a.min == b.min && a.max == b.max;
}

bool operator==(const DEConfig& a, const DEConfig& b) {
    return a.population == b.population && a.generations == b.generations &&
           a.weight_factor == b.weight_factor && a.crossover_rate == b.crossover_rate &&
           a.connectivity_weight == b.connectivity_weight &&
           a.targets_weight == b.targets_weight && a.targets_scale == b.targets_scale &&
           a.de_seed == b.de_seed && a.strict_eq9 == b.strict_eq9 && a.genes == b.genes &&
           a.sim == b.sim;
}

}  // namespace swarmsim
