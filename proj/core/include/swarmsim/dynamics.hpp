#pragma once

#include <vector>

#include "swarmsim/environment.hpp"
#include "swarmsim/vec2.hpp"

namespace swarmsim {

enum class AgentKind { Ground, Air };

struct AgentState {
    int id = 0;
    AgentKind kind = AgentKind::Ground;
    Vec2 position;
    Vec2 velocity;
};

/// Ground agent parameters. The five plain weights are the fixed movement
/// pattern; the two *_air weights are chromosome genes.
struct GroundParams {
    double vision_distance = 30.0;     // V_d
    double vision_angle = 360.0;       // V_alpha, degrees
    double obstacle_range = 30.0;      // R_O
    double target_range = 30.0;        // R_GT
    double separation_distance = 10.0; // SD_G
    double speed = 1.0;                // constant ground speed

    double cohesion_weight = 0.01;
    double alignment_weight = 0.125;
    double separation_weight = 1.0;
    double obstacle_weight = 1.0;
    double target_weight = 1.0;

    double cohesion_air_weight = 0.05;   // gene W_C_AG
    double alignment_air_weight = 0.05;  // gene W_A_AG
};

/// UAV parameters. Only the separation weight is fixed; everything else in
/// the force sum is a chromosome gene.
struct AirParams {
    double comm_range = 300.0;            // R
    double target_range = 300.0;          // R_AT, defaults to the comm range
    double separation_distance = 195.0;   // SD_A, gene
    double speed = 3.0;                   // s_a, gene
    double separation_weight = 1.0;       // W_S_AA, fixed

    double cohesion_air_weight = 0.5;     // gene W_C_AA
    double alignment_air_weight = 0.5;    // gene W_A_AA
    double cohesion_ground_weight = 0.5;  // gene W_C_GA
    double alignment_ground_weight = 0.5; // gene W_A_GA
    double target_weight = 0.5;           // gene W_T_A
};

using NeighborList = std::vector<const AgentState*>;

/// Network neighborhood of a UAV: every other agent within the communication
/// range (closed threshold), full circle. Candidates are whatever list the
/// caller passes; self is excluded by id.
NeighborList air_neighbors(const AgentState& self, const std::vector<AgentState>& others,
                           double comm_range);

/// Vision neighborhood of a ground agent: agents within vision_distance whose
/// bearing from the velocity direction is within +/- vision_angle/2 degrees.
/// An angle of 360 or more is a pure distance filter.
NeighborList ground_neighbors(const AgentState& self, const std::vector<AgentState>& others,
                              double vision_distance, double vision_angle);

/// Unit steering toward the neighbors' position centroid; zero without neighbors.
Vec2 cohesion(const AgentState& self, const NeighborList& neighbors);

/// Unit steering along the neighbors' mean velocity; zero without neighbors
/// (or when the velocities cancel).
Vec2 alignment(const NeighborList& neighbors);

/// Unit steering away from neighbors closer than separation_distance, each
/// weighted by inverse squared distance. A coincident neighbor contributes a
/// fixed unit vector along +x or -x chosen by id order, so the pair pushes
/// apart deterministically.
Vec2 separation(const AgentState& self, const NeighborList& neighbors,
                double separation_distance);

/// Unit steering toward an active target within detect_range, else zero.
Vec2 target_attraction(const AgentState& self, const Target& target, double detect_range);

/// Unit steering perpendicular to the velocity, away from the nearest obstacle
/// that blocks the movement line (see obstacle_ahead); zero when none does.
/// A dead-ahead obstacle steers left.
Vec2 obstacle_avoidance(const AgentState& self, const std::vector<Obstacle>& obstacles,
                        double detect_range);

/// Velocity law for UAVs: previous velocity plus the six weighted unit forces,
/// rescaled to the constant UAV speed. A zero sum keeps the previous heading.
Vec2 uav_velocity_update(const AgentState& self, const NeighborList& air_nb,
                         const NeighborList& ground_nb, const Target& target,
                         const AirParams& params);

/// Velocity law for ground agents: previous velocity plus the seven weighted
/// unit forces, rescaled to the constant ground speed. linked_uavs are the
/// UAVs within the communication range of this agent.
Vec2 ground_velocity_update(const AgentState& self, const NeighborList& ground_nb,
                            const NeighborList& linked_uavs, const Target& target,
                            const std::vector<Obstacle>& obstacles, const GroundParams& params);

/// Applies one movement step: tentative position plus boundary reflection.
AgentState position_update(const AgentState& self, Vec2 new_velocity, const Space& space);

}  // namespace swarmsim
