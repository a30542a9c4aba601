#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "swarmsim/rng.hpp"
#include "swarmsim/vec2.hpp"

namespace swarmsim {

/// Rectangular operation space with the origin at the bottom-left corner.
struct Space {
    double length = 1000.0;  // extent along x
    double width = 1000.0;   // extent along y
};

/// Static circular obstacle, entirely inside the space.
struct Obstacle {
    Vec2 center;
    double radius = 0.0;
};

/// One search target. Touches accumulate over distinct ground agent ids;
/// once `reached_by` holds n_r ids the target deactivates.
struct Target {
    Vec2 position;
    double contact_radius = 10.0;
    std::vector<int> reached_by;  // distinct ground agent ids, first-touch order
    bool active = false;

    bool touched_by(int id) const;
};

/// Outcome of a forward obstacle probe (see obstacle_ahead).
struct ObstacleHit {
    double forward;  // distance to the obstacle center along the movement direction
    double lateral;  // distance from the center to the movement line
    Side side;       // side of the movement line the center lies on
};

/// Probes one obstacle against the agent's movement ray. With u the unit
/// velocity and w the vector to the obstacle center, reports
/// forward = w.u and lateral = |w - (w.u)u| when 0 < forward < detect_range
/// and lateral < obstacle.radius; otherwise nothing. A center exactly on the
/// movement line reports Side::Right. Zero velocity never detects.
std::optional<ObstacleHit> obstacle_ahead(Vec2 agent_pos, Vec2 velocity,
                                          const Obstacle& obstacle, double detect_range);

struct ReflectResult {
    Vec2 position;
    Vec2 velocity;
};

/// Mirror reflection at the space boundary: a coordinate c past its bound B
/// maps to 2B - c (and -c below zero) and the matching velocity component is
/// negated. Handles at most one crossing per axis, which covers every
/// admissible speed.
ReflectResult reflect(const Space& space, Vec2 tentative_pos, Vec2 velocity);

/// Produces targets one at a time. Spawn positions are uniform over the space
/// inset by the contact radius, rejection-sampled to avoid obstacle interiors;
/// the random draws come from the simulation stream passed in by the caller.
class TargetStream {
public:
    TargetStream(int required_touches, double contact_radius);

    /// Spawns the next active target. Throws std::runtime_error if rejection
    /// sampling exceeds 100000 attempts.
    Target spawn(Rng& rng, const Space& space, const std::vector<Obstacle>& obstacles);

    int spawn_count() const { return spawn_count_; }
    int required_touches() const { return required_touches_; }
    double contact_radius() const { return contact_radius_; }

private:
    int required_touches_;
    double contact_radius_;
    int spawn_count_ = 0;
};

/// Adds every ground agent within the contact radius to the target's reached
/// set (cumulative, distinct ids) and deactivates the target once
/// required_touches ids have accumulated.
void record_touches(Target& target, const std::vector<std::pair<int, Vec2>>& ground_positions,
                    int required_touches);

}  // namespace swarmsim
