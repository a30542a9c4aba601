#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "swarmsim/rng.hpp"
#include "swarmsim/simulation.hpp"

namespace swarmsim {

inline constexpr int kGeneCount = 9;

/// Gene index in the 9-component chromosome. The order is fixed and shared by
/// every chromosome-shaped artifact (population vectors, config keys, the
/// best-chromosome document).
enum class Gene : int {
    UavCohesionAir = 0,
    UavAlignmentAir,
    UavSeparationDistance,
    UavCohesionGround,
    UavAlignmentGround,
    UavTargetAttraction,
    UavSpeed,
    GroundCohesionAir,
    GroundAlignmentAir,
};

struct GeneSpec {
    std::string name;
    double min = 0.0;
    double max = 1.0;
};

using GeneSpecs = std::array<GeneSpec, kGeneCount>;

/// The reference value ranges: UAV weights in [0,1], separation distance in
/// [100,290], speed in [1,5], ground-to-air weights in [0,0.1].
GeneSpecs default_gene_specs();

/// The 9 evolvable swarm parameters.
struct Chromosome {
    std::array<double, kGeneCount> genes{};

    double operator[](Gene g) const { return genes[static_cast<std::size_t>(g)]; }
    double& operator[](Gene g) { return genes[static_cast<std::size_t>(g)]; }
    friend bool operator==(const Chromosome&, const Chromosome&) = default;

    bool within_bounds(const GeneSpecs& specs) const;
};

/// Chromosome currently carried by a pair of parameter blocks.
Chromosome extract_chromosome(const AirParams& air, const GroundParams& ground);

/// Writes the chromosome into the parameter blocks used by the simulation.
void apply_chromosome(const Chromosome& c, AirParams& air, GroundParams& ground);

/// One evaluated candidate: the chromosome with its simulated objectives.
struct Evaluation {
    Chromosome chromosome;
    int targets_reached = 0;   // N_T
    double connectivity = 0.0; // N_C
    double fitness = 0.0;
};

/// Differential evolution settings. The DE draws its own randomness from
/// de_seed; every fitness evaluation runs the simulation with the same
/// sim.sim_seed so candidates face identical scenarios.
struct DEConfig {
    int population = 50;
    int generations = 100;
    double weight_factor = 0.6;        // F
    double crossover_rate = 0.8;       // CR
    double connectivity_weight = 1.0;  // W_n
    double targets_weight = 1.0;       // W_t
    double targets_scale = 10.0;       // s_s
    std::uint64_t de_seed = 1;
    bool strict_eq9 = false;  // drop the forced donor index in crossover
    GeneSpecs genes = default_gene_specs();
    SimConfig sim;

    void validate() const;
};

/// pop-size chromosomes with every gene uniform within its range.
std::vector<Chromosome> init_population(const DEConfig& cfg, Rng& rng);

/// Weighted-sum fitness W_n * N_C + W_t * N_T / s_s.
double fitness(const SimMetrics& m, const DEConfig& cfg);

/// Runs the simulation for one chromosome and scores it.
Evaluation evaluate(const Chromosome& c, const DEConfig& cfg);

/// Donor vector r1 + F * (r2 - r3), clamped gene-wise into bounds.
Chromosome donor(const Chromosome& r1, const Chromosome& r2, const Chromosome& r3, double F,
                 const GeneSpecs& specs);

/// Binomial crossover: gene j comes from the donor when rand <= CR, else from
/// the target. Unless strict_eq9 is set, one index drawn up front is always
/// taken from the donor. RNG order: forced index first, then one uniform per
/// gene.
Chromosome crossover(const Chromosome& target, const Chromosome& donor_vec, double crossover_rate,
                     Rng& rng, bool strict_eq9);

/// Greedy selection: the trial replaces the target only on strictly larger
/// fitness; ties keep the target.
const Evaluation& select(const Evaluation& target, const Evaluation& trial);

struct GenerationRecord {
    int generation = 0;     // 1-based
    double avg_fitness = 0.0;
    double best_fitness = 0.0;
    int best_targets = 0;        // max N_T in the population
    double best_connectivity = 0.0;  // max N_C in the population
    double seconds = 0.0;        // wall clock, excluded from determinism checks
};

struct EvolutionReport {
    double initial_avg_fitness = 0.0;
    double initial_best_fitness = 0.0;
    std::vector<GenerationRecord> generations;
    std::vector<Evaluation> final_population;
    Evaluation best;  // highest fitness in the final population
};

using GenerationObserver = std::function<void(const GenerationRecord&)>;

/// Full DE run with dual elitism: per generation the best-by-targets and
/// best-by-connectivity individuals re-enter the next population unchanged,
/// replacing its lowest-fitness members unless they already survived
/// selection. Evaluations may fan out over `parallel` threads; results are
/// identical to a serial run.
EvolutionReport evolve(const DEConfig& cfg, int parallel = 1,
                       const GenerationObserver& observer = {});

}  // namespace swarmsim
