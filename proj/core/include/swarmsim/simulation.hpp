#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "swarmsim/connectivity.hpp"
#include "swarmsim/dynamics.hpp"
#include "swarmsim/environment.hpp"
#include "swarmsim/rng.hpp"

namespace swarmsim {

/// Full scenario description for one simulation run. Defaults reproduce the
/// reference operational settings: a 1000x1000 space with five obstacles,
/// 100 ground agents, 4 UAVs, 10000 timesteps.
struct SimConfig {
    Space space;
    std::vector<Obstacle> obstacles = default_obstacles({});
    int ground_count = 100;  // n_g
    int air_count = 4;       // n_a
    int timesteps = 10000;
    GroundParams ground;
    AirParams air;
    int required_touches = 10;        // n_r
    double target_radius = 10.0;      // r_t
    std::uint64_t sim_seed = 1;
    double ground_direct_range = 0.0; // direct ground-ground links, 0 = relay-only

    /// Five radius-80 discs: one at the space center, one per quadrant center.
    static std::vector<Obstacle> default_obstacles(const Space& space);

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// Per-run outputs used as the optimization objectives.
struct SimMetrics {
    int targets_reached = 0;           // N_T
    double connectivity = 0.0;         // N_C
    std::vector<int> component_series; // largest ground component, one per step
    std::vector<int> targets_series;   // cumulative targets reached, one per step
};

/// One simulation world. Construction performs the seeded initialization;
/// step() advances one synchronous timestep. The single RNG stream seeded by
/// sim_seed is consumed in a fixed order: ground positions (id order), ground
/// headings, UAV headings, then target spawns as they occur.
class World {
public:
    explicit World(const SimConfig& cfg);

    /// One synchronous timestep: all velocities from the previous snapshot,
    /// then all positions with reflection, then target touches and respawn,
    /// then the connectivity sample.
    void step();

    const SimConfig& config() const { return cfg_; }
    const std::vector<AgentState>& agents() const { return agents_; }
    const Target& target() const { return target_; }
    int steps_taken() const { return steps_taken_; }
    int targets_reached() const { return targets_reached_; }
    const std::vector<int>& component_series() const { return component_series_; }
    const std::vector<int>& targets_series() const { return targets_series_; }

    /// Assembles the metrics accumulated so far. Requires at least one step.
    SimMetrics metrics() const;

private:
    SimConfig cfg_;
    Rng rng_;
    TargetStream target_stream_;
    Target target_;
    std::vector<AgentState> agents_;
    std::vector<AgentState> snapshot_;
    std::vector<AgentState> snapshot_ground_;
    std::vector<AgentState> snapshot_air_;
    std::vector<Vec2> new_velocities_;
    std::vector<std::pair<int, Vec2>> ground_positions_;
    std::vector<int> component_series_;
    std::vector<int> targets_series_;
    int targets_reached_ = 0;
    int steps_taken_ = 0;
};

World initialize(const SimConfig& cfg);
void step(World& world);

/// Observer invoked after initialization (step 0) and after every step.
using StepObserver = std::function<void(int step, const std::vector<AgentState>&)>;

/// Runs the configured number of timesteps and assembles the metrics.
SimMetrics run(const SimConfig& cfg, const StepObserver& observer = {});

}  // namespace swarmsim
