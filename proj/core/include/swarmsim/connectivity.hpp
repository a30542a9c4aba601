#pragma once

#include <utility>
#include <vector>

#include "swarmsim/dynamics.hpp"

namespace swarmsim {

/// Snapshot communication graph. Ground agents have no direct links to each
/// other by default: connectivity is mediated by UAV relays, so edges are
/// ground-air or air-air, both within the single communication range R.
struct CommGraph {
    std::vector<int> ground_nodes;
    std::vector<int> air_nodes;
    std::vector<std::pair<int, int>> edges;
};

/// Builds the communication graph over one state snapshot. Edges use the
/// closed threshold distance <= comm_range. ground_direct_range > 0 adds
/// direct ground-ground edges within that range (sensitivity studies only;
/// 0 disables them).
CommGraph build_graph(const std::vector<AgentState>& agents, double comm_range,
                      double ground_direct_range = 0.0);

/// Maximum number of ground nodes contained in any single connected component
/// of the full graph; 0 when there are no ground nodes. Computed from scratch
/// with union-find.
int largest_ground_component(const CommGraph& g);

/// Mean over timesteps of largest component size / ground count. Throws
/// std::invalid_argument for an empty series or non-positive ground count.
double connectivity_fraction(const std::vector<int>& sizes, int ground_count);

}  // namespace swarmsim
