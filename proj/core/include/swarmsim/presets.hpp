#pragma once

#include "swarmsim/evolution.hpp"

namespace swarmsim {

inline constexpr const char* kVersion = "0.1.0";

/// Reference experiment: 1000x1000 space, 100 ground agents, 4 UAVs, 10000
/// timesteps, population 50, 100 generations. Runtime is hours per seed; see
/// the README estimate or `evolve --full-scale --estimate-only`.
DEConfig full_scale_config();

/// Reduced experiment used by the acceptance suite and for quick local runs:
/// 20 ground agents, 2 UAVs, 500 timesteps, population 10, 15 generations, in
/// a 600x600 space with easier targets. Seconds per seed.
DEConfig desk_scale_config();

}  // namespace swarmsim
