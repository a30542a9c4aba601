#include <benchmark/benchmark.h>

#include "swarmsim/connectivity.hpp"
#include "swarmsim/presets.hpp"
#include "swarmsim/simulation.hpp"

using namespace swarmsim;

namespace {

SimConfig full_scale_sim() {
    SimConfig cfg = full_scale_config().sim;
    cfg.timesteps = 1;
    return cfg;
}

}  // namespace

// One synchronous timestep at the reference scale (104 agents).
static void BM_StepFullScale(benchmark::State& state) {
    World world(full_scale_sim());
    for (auto _ : state) {
        world.step();
    }
}
BENCHMARK(BM_StepFullScale);

static void BM_BuildGraphFullScale(benchmark::State& state) {
    const World world(full_scale_sim());
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_graph(world.agents(), 300.0));
    }
}
BENCHMARK(BM_BuildGraphFullScale);

static void BM_LargestGroundComponent(benchmark::State& state) {
    const World world(full_scale_sim());
    const CommGraph graph = build_graph(world.agents(), 300.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(largest_ground_component(graph));
    }
}
BENCHMARK(BM_LargestGroundComponent);

// A complete desk-scale simulation, the unit of work of one DE evaluation.
static void BM_DeskScaleSimulation(benchmark::State& state) {
    const SimConfig cfg = desk_scale_config().sim;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(cfg));
    }
}
BENCHMARK(BM_DeskScaleSimulation);

// A full-length reference simulation (10000 steps); the per-evaluation cost
// behind the full-scale runtime estimate.
static void BM_FullScaleSimulation(benchmark::State& state) {
    SimConfig cfg = full_scale_config().sim;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(cfg));
    }
}
BENCHMARK(BM_FullScaleSimulation)->Iterations(1)->Unit(benchmark::kSecond);

BENCHMARK_MAIN();
