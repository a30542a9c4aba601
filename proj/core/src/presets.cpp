#include "swarmsim/presets.hpp"

namespace swarmsim {

DEConfig full_scale_config() {
    DEConfig cfg;  // struct defaults are the reference settings
    cfg.population = 50;
    cfg.generations = 100;
    cfg.sim.ground_count = 100;
    cfg.sim.air_count = 4;
    cfg.sim.timesteps = 10000;
    return cfg;
}

DEConfig desk_scale_config() {
    DEConfig cfg;
    cfg.population = 10;
    cfg.generations = 15;

    cfg.sim.space = {600.0, 600.0};
    cfg.sim.obstacles = {
        {{300.0, 300.0}, 48.0},
        {{150.0, 150.0}, 48.0},
        {{450.0, 150.0}, 48.0},
        {{150.0, 450.0}, 48.0},
        {{450.0, 450.0}, 48.0},
    };
    cfg.sim.ground_count = 20;
    cfg.sim.air_count = 2;
    cfg.sim.timesteps = 500;
    cfg.sim.required_touches = 2;
    cfg.sim.target_radius = 15.0;
    cfg.sim.sim_seed = 7;

    cfg.sim.air.comm_range = 200.0;
    cfg.sim.air.target_range = 200.0;

    // UAV separation-distance genes scaled to the smaller comm range.
    cfg.genes[static_cast<std::size_t>(Gene::UavSeparationDistance)].min = 60.0;
    cfg.genes[static_cast<std::size_t>(Gene::UavSeparationDistance)].max = 180.0;
    cfg.sim.air.separation_distance = 120.0;
    return cfg;
}

}  // namespace swarmsim
