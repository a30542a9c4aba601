#include "swarmsim/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace swarmsim {

std::vector<Obstacle> SimConfig::default_obstacles(const Space& space) {
    const double cx = space.length / 2.0;
    const double cy = space.width / 2.0;
    const double qx = space.length / 4.0;
    const double qy = space.width / 4.0;
    const double r = 80.0;
    return {
        {{cx, cy}, r},
        {{qx, qy}, r},
        {{3.0 * qx, qy}, r},
        {{qx, 3.0 * qy}, r},
        {{3.0 * qx, 3.0 * qy}, r},
    };
}

namespace {

void require(bool ok, const std::string& field, const std::string& what) {
    if (!ok) throw std::invalid_argument("invalid config: " + field + " " + what);
}

}  // namespace

void SimConfig::validate() const {
    require(space.length > 0.0, "space.length", "must be positive");
    require(space.width > 0.0, "space.width", "must be positive");
    require(ground_count >= 1, "sim.ground_count", "must be at least 1");
    require(air_count >= 0, "sim.air_count", "must be non-negative");
    require(timesteps >= 1, "sim.timesteps", "must be at least 1");
    require(required_touches >= 1, "sim.required_touches", "must be at least 1");
    require(target_radius > 0.0, "sim.target_radius", "must be positive");
    require(space.length > 2.0 * target_radius && space.width > 2.0 * target_radius,
            "sim.target_radius", "leaves no room for target placement");
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
        const auto& o = obstacles[i];
        const std::string field = "obstacle[" + std::to_string(i) + "]";
        require(o.radius > 0.0, field, "radius must be positive");
        require(o.center.x - o.radius >= 0.0 && o.center.x + o.radius <= space.length &&
                    o.center.y - o.radius >= 0.0 && o.center.y + o.radius <= space.width,
                field, "disc must lie inside the space");
    }
    require(ground.vision_distance > 0.0, "ground.vision_distance", "must be positive");
    require(ground.vision_angle > 0.0 && ground.vision_angle <= 360.0, "ground.vision_angle",
            "must be in (0, 360]");
    require(ground.obstacle_range > 0.0, "ground.obstacle_range", "must be positive");
    require(ground.target_range > 0.0, "ground.target_range", "must be positive");
    require(ground.separation_distance > 0.0, "ground.separation_distance", "must be positive");
    require(ground.speed > 0.0, "ground.speed", "must be positive");
    require(air.comm_range > 0.0, "air.comm_range", "must be positive");
    require(air.target_range > 0.0, "air.target_range", "must be positive");
    require(air.separation_distance > 0.0, "air.separation_distance", "must be positive");
    require(air.speed > 0.0, "air.speed", "must be positive");
    const double max_excursion = std::min(space.length, space.width) / 2.0;
    require(ground.speed < max_excursion, "ground.speed", "too large for the space");
    require(air.speed < max_excursion, "air.speed", "too large for the space");
    require(ground_direct_range >= 0.0, "connectivity.ground_direct_range",
            "must be non-negative");
    for (double w : {ground.cohesion_weight, ground.alignment_weight, ground.separation_weight,
                     ground.obstacle_weight, ground.target_weight, ground.cohesion_air_weight,
                     ground.alignment_air_weight, air.separation_weight, air.cohesion_air_weight,
                     air.alignment_air_weight, air.cohesion_ground_weight,
                     air.alignment_ground_weight, air.target_weight}) {
        require(std::isfinite(w) && w >= 0.0, "force weight", "must be finite and non-negative");
    }
}

namespace {

bool inside_any(Vec2 p, const std::vector<Obstacle>& obstacles) {
    for (const auto& o : obstacles) {
        if (distance_sq(p, o.center) < o.radius * o.radius) return true;
    }
    return false;
}

Vec2 sample_free_position(Rng& rng, const Space& space, const std::vector<Obstacle>& obstacles) {
    constexpr int kMaxAttempts = 100000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const Vec2 p{rng.uniform(0.0, space.length), rng.uniform(0.0, space.width)};
        if (!inside_any(p, obstacles)) return p;
    }
    throw std::runtime_error("initialize: no obstacle-free position found");
}

Vec2 random_heading(Rng& rng, double speed) {
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return {speed * std::cos(angle), speed * std::sin(angle)};
}

}  // namespace

World::World(const SimConfig& cfg)
    : cfg_(cfg),
      rng_(cfg.sim_seed),
      target_stream_(cfg.required_touches, cfg.target_radius) {
    cfg_.validate();

    agents_.reserve(static_cast<std::size_t>(cfg_.ground_count + cfg_.air_count));
    for (int i = 0; i < cfg_.ground_count; ++i) {
        AgentState a;
        a.id = i;
        a.kind = AgentKind::Ground;
        a.position = sample_free_position(rng_, cfg_.space, cfg_.obstacles);
        agents_.push_back(a);
    }
    for (auto& a : agents_) a.velocity = random_heading(rng_, cfg_.ground.speed);

    // UAVs start on the corners of an axis-aligned square around the space
    // center (cycled when air_count exceeds 4), side 200 when the space allows:
    // with the default comm range the initial air network is fully connected.
    const double cx = cfg_.space.length / 2.0;
    const double cy = cfg_.space.width / 2.0;
    const double half = std::min({100.0, cfg_.space.length / 4.0, cfg_.space.width / 4.0});
    const Vec2 corners[4] = {{cx - half, cy - half},
                             {cx + half, cy - half},
                             {cx - half, cy + half},
                             {cx + half, cy + half}};
    for (int i = 0; i < cfg_.air_count; ++i) {
        AgentState a;
        a.id = cfg_.ground_count + i;
        a.kind = AgentKind::Air;
        a.position = corners[i % 4];
        agents_.push_back(a);
    }
    for (int i = 0; i < cfg_.air_count; ++i) {
        agents_[static_cast<std::size_t>(cfg_.ground_count + i)].velocity =
            random_heading(rng_, cfg_.air.speed);
    }

    target_ = target_stream_.spawn(rng_, cfg_.space, cfg_.obstacles);

    new_velocities_.resize(agents_.size());
    ground_positions_.resize(static_cast<std::size_t>(cfg_.ground_count));
}

void World::step() {
    snapshot_ = agents_;
    snapshot_ground_.assign(snapshot_.begin(),
                            snapshot_.begin() + static_cast<std::ptrdiff_t>(cfg_.ground_count));
    snapshot_air_.assign(snapshot_.begin() + static_cast<std::ptrdiff_t>(cfg_.ground_count),
                         snapshot_.end());

    // Velocity phase: every agent reads only the snapshot, so per-agent
    // results are independent of evaluation order.
    for (std::size_t i = 0; i < snapshot_.size(); ++i) {
        const AgentState& self = snapshot_[i];
        if (self.kind == AgentKind::Air) {
            const NeighborList air_nb = air_neighbors(self, snapshot_air_, cfg_.air.comm_range);
            const NeighborList ground_nb =
                air_neighbors(self, snapshot_ground_, cfg_.air.comm_range);
            new_velocities_[i] = uav_velocity_update(self, air_nb, ground_nb, target_, cfg_.air);
        } else {
            const NeighborList peers = ground_neighbors(
                self, snapshot_ground_, cfg_.ground.vision_distance, cfg_.ground.vision_angle);
            const NeighborList linked_uavs =
                air_neighbors(self, snapshot_air_, cfg_.air.comm_range);
            new_velocities_[i] = ground_velocity_update(self, peers, linked_uavs, target_,
                                                        cfg_.obstacles, cfg_.ground);
        }
    }

    // Commit phase: positions with reflection.
    for (std::size_t i = 0; i < agents_.size(); ++i) {
        agents_[i] = position_update(snapshot_[i], new_velocities_[i], cfg_.space);
    }

    // Target lifecycle, then the post-move connectivity sample.
    for (int i = 0; i < cfg_.ground_count; ++i) {
        ground_positions_[static_cast<std::size_t>(i)] = {i, agents_[static_cast<std::size_t>(i)].position};
    }
    record_touches(target_, ground_positions_, cfg_.required_touches);
    if (!target_.active) {
        ++targets_reached_;
        target_ = target_stream_.spawn(rng_, cfg_.space, cfg_.obstacles);
    }

    const CommGraph graph = build_graph(agents_, cfg_.air.comm_range, cfg_.ground_direct_range);
    component_series_.push_back(largest_ground_component(graph));
    targets_series_.push_back(targets_reached_);
    ++steps_taken_;
}

SimMetrics World::metrics() const {
    SimMetrics m;
    m.targets_reached = targets_reached_;
    m.component_series = component_series_;
    m.targets_series = targets_series_;
    m.connectivity = connectivity_fraction(component_series_, cfg_.ground_count);
    return m;
}

World initialize(const SimConfig& cfg) { return World(cfg); }

void step(World& world) { world.step(); }

SimMetrics run(const SimConfig& cfg, const StepObserver& observer) {
    World world(cfg);
    if (observer) observer(0, world.agents());
    for (int t = 1; t <= cfg.timesteps; ++t) {
        world.step();
        if (observer) observer(t, world.agents());
    }
    return world.metrics();
}

}  // namespace swarmsim
