#include "swarmsim/environment.hpp"

#include <algorithm>
#include <stdexcept>

namespace swarmsim {

bool Target::touched_by(int id) const {
    return std::find(reached_by.begin(), reached_by.end(), id) != reached_by.end();
}

std::optional<ObstacleHit> obstacle_ahead(Vec2 agent_pos, Vec2 velocity,
                                          const Obstacle& obstacle, double detect_range) {
    if (velocity.is_zero()) return std::nullopt;
    const Vec2 u = normalize(velocity);
    const Vec2 w = obstacle.center - agent_pos;
    const double forward = dot(w, u);
    if (forward <= 0.0 || forward >= detect_range) return std::nullopt;
    const double lateral = norm(w - u * forward);
    if (lateral >= obstacle.radius) return std::nullopt;
    const Side side = cross(u, w) > 0.0 ? Side::Left : Side::Right;
    return ObstacleHit{forward, lateral, side};
}

ReflectResult reflect(const Space& space, Vec2 p, Vec2 v) {
    if (p.x < 0.0) {
        p.x = -p.x;
        v.x = -v.x;
    } else if (p.x > space.length) {
        p.x = 2.0 * space.length - p.x;
        v.x = -v.x;
    }
    if (p.y < 0.0) {
        p.y = -p.y;
        v.y = -v.y;
    } else if (p.y > space.width) {
        p.y = 2.0 * space.width - p.y;
        v.y = -v.y;
    }
    return {p, v};
}

namespace {

bool inside_any_obstacle(Vec2 p, const std::vector<Obstacle>& obstacles) {
    for (const auto& o : obstacles) {
        if (distance_sq(p, o.center) < o.radius * o.radius) return true;
    }
    return false;
}

}  // namespace

TargetStream::TargetStream(int required_touches, double contact_radius)
    : required_touches_(required_touches), contact_radius_(contact_radius) {}

Target TargetStream::spawn(Rng& rng, const Space& space, const std::vector<Obstacle>& obstacles) {
    constexpr int kMaxAttempts = 100000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const double x = rng.uniform(contact_radius_, space.length - contact_radius_);
        const double y = rng.uniform(contact_radius_, space.width - contact_radius_);
        const Vec2 p{x, y};
        if (inside_any_obstacle(p, obstacles)) continue;
        Target t;
        t.position = p;
        t.contact_radius = contact_radius_;
        t.active = true;
        ++spawn_count_;
        return t;
    }
    throw std::runtime_error("TargetStream::spawn: no obstacle-free position found");
}

void record_touches(Target& target, const std::vector<std::pair<int, Vec2>>& ground_positions,
                    int required_touches) {
    if (!target.active) return;
    const double reach_sq = target.contact_radius * target.contact_radius;
    for (const auto& [id, pos] : ground_positions) {
        if (distance_sq(pos, target.position) <= reach_sq && !target.touched_by(id)) {
            target.reached_by.push_back(id);
        }
    }
    if (static_cast<int>(target.reached_by.size()) >= required_touches) {
        target.active = false;
    }
}

}  // namespace swarmsim
