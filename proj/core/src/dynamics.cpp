#include "swarmsim/dynamics.hpp"

#include <cmath>
#include <numbers>

namespace swarmsim {

NeighborList air_neighbors(const AgentState& self, const std::vector<AgentState>& others,
                           double comm_range) {
    NeighborList result;
    const double range_sq = comm_range * comm_range;
    for (const auto& other : others) {
        if (other.id == self.id) continue;
        if (distance_sq(self.position, other.position) <= range_sq) {
            result.push_back(&other);
        }
    }
    return result;
}

NeighborList ground_neighbors(const AgentState& self, const std::vector<AgentState>& others,
                              double vision_distance, double vision_angle) {
    NeighborList result;
    const double range_sq = vision_distance * vision_distance;
    const bool full_circle = vision_angle >= 360.0 || self.velocity.is_zero();
    // nudged down so a bearing exactly on the boundary stays included
    const double cos_half =
        full_circle ? -1.0 : std::cos(vision_angle * 0.5 * std::numbers::pi / 180.0) - 1e-12;
    const Vec2 heading = normalize(self.velocity);
    for (const auto& other : others) {
        if (other.id == self.id) continue;
        if (distance_sq(self.position, other.position) > range_sq) continue;
        if (!full_circle) {
            const Vec2 to_other = normalize(other.position - self.position);
            // A coincident neighbor has no bearing; treat it as dead ahead.
            if (!to_other.is_zero() && dot(heading, to_other) < cos_half) continue;
        }
        result.push_back(&other);
    }
    return result;
}

Vec2 cohesion(const AgentState& self, const NeighborList& neighbors) {
    if (neighbors.empty()) return {};
    Vec2 centroid;
    for (const auto* nb : neighbors) centroid += nb->position;
    centroid = centroid * (1.0 / static_cast<double>(neighbors.size()));
    return normalize(centroid - self.position);
}

Vec2 alignment(const NeighborList& neighbors) {
    if (neighbors.empty()) return {};
    Vec2 mean;
    for (const auto* nb : neighbors) mean += nb->velocity;
    return normalize(mean);
}

Vec2 separation(const AgentState& self, const NeighborList& neighbors,
                double separation_distance) {
    Vec2 sum;
    const double sep_sq = separation_distance * separation_distance;
    for (const auto* nb : neighbors) {
        const double d_sq = distance_sq(self.position, nb->position);
        if (d_sq >= sep_sq) continue;
        if (d_sq == 0.0) {
            sum += self.id < nb->id ? Vec2{1.0, 0.0} : Vec2{-1.0, 0.0};
        } else {
            sum += (self.position - nb->position) * (1.0 / d_sq);
        }
    }
    return normalize(sum);
}

Vec2 target_attraction(const AgentState& self, const Target& target, double detect_range) {
    if (!target.active) return {};
    if (distance_sq(self.position, target.position) > detect_range * detect_range) return {};
    return normalize(target.position - self.position);
}

Vec2 obstacle_avoidance(const AgentState& self, const std::vector<Obstacle>& obstacles,
                        double detect_range) {
    std::optional<ObstacleHit> nearest;
    for (const auto& o : obstacles) {
        const auto hit = obstacle_ahead(self.position, self.velocity, o, detect_range);
        if (hit && (!nearest || hit->forward < nearest->forward)) nearest = hit;
    }
    if (!nearest) return {};
    const Side steer = nearest->side == Side::Left ? Side::Right : Side::Left;
    return perpendicular(self.velocity, steer);
}

namespace {

// Rescales the force sum to the constant speed; a zero sum keeps the previous
// heading, and a zero previous velocity stays zero.
Vec2 rescale(Vec2 sum, Vec2 previous_velocity, double speed) {
    Vec2 heading = normalize(sum);
    if (heading.is_zero()) heading = normalize(previous_velocity);
    return heading * speed;
}

}  // namespace

Vec2 uav_velocity_update(const AgentState& self, const NeighborList& air_nb,
                         const NeighborList& ground_nb, const Target& target,
                         const AirParams& p) {
    const Vec2 sum = self.velocity +
                     p.cohesion_air_weight * cohesion(self, air_nb) +
                     p.alignment_air_weight * alignment(air_nb) +
                     p.separation_weight * separation(self, air_nb, p.separation_distance) +
                     p.cohesion_ground_weight * cohesion(self, ground_nb) +
                     p.alignment_ground_weight * alignment(ground_nb) +
                     p.target_weight * target_attraction(self, target, p.target_range);
    return rescale(sum, self.velocity, p.speed);
}

Vec2 ground_velocity_update(const AgentState& self, const NeighborList& ground_nb,
                            const NeighborList& linked_uavs, const Target& target,
                            const std::vector<Obstacle>& obstacles, const GroundParams& p) {
    const Vec2 sum = self.velocity +
                     p.cohesion_weight * cohesion(self, ground_nb) +
                     p.alignment_weight * alignment(ground_nb) +
                     p.separation_weight * separation(self, ground_nb, p.separation_distance) +
                     p.cohesion_air_weight * cohesion(self, linked_uavs) +
                     p.alignment_air_weight * alignment(linked_uavs) +
                     p.target_weight * target_attraction(self, target, p.target_range) +
                     p.obstacle_weight * obstacle_avoidance(self, obstacles, p.obstacle_range);
    return rescale(sum, self.velocity, p.speed);
}

AgentState position_update(const AgentState& self, Vec2 new_velocity, const Space& space) {
    const auto [position, velocity] = reflect(space, self.position + new_velocity, new_velocity);
    return {self.id, self.kind, position, velocity};
}

}  // namespace swarmsim
