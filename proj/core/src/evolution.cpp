#include "swarmsim/evolution.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace swarmsim {

GeneSpecs default_gene_specs() {
    return {{
        {"uav_cohesion_air", 0.0, 1.0},
        {"uav_alignment_air", 0.0, 1.0},
        {"uav_separation_distance", 100.0, 290.0},
        {"uav_cohesion_ground", 0.0, 1.0},
        {"uav_alignment_ground", 0.0, 1.0},
        {"uav_target_attraction", 0.0, 1.0},
        {"uav_speed", 1.0, 5.0},
        {"ground_cohesion_air", 0.0, 0.1},
        {"ground_alignment_air", 0.0, 0.1},
    }};
}

bool Chromosome::within_bounds(const GeneSpecs& specs) const {
    for (int i = 0; i < kGeneCount; ++i) {
        const auto& s = specs[static_cast<std::size_t>(i)];
        const double v = genes[static_cast<std::size_t>(i)];
        if (!(v >= s.min && v <= s.max)) return false;
    }
    return true;
}

Chromosome extract_chromosome(const AirParams& air, const GroundParams& ground) {
    Chromosome c;
    c[Gene::UavCohesionAir] = air.cohesion_air_weight;
    c[Gene::UavAlignmentAir] = air.alignment_air_weight;
    c[Gene::UavSeparationDistance] = air.separation_distance;
    c[Gene::UavCohesionGround] = air.cohesion_ground_weight;
    c[Gene::UavAlignmentGround] = air.alignment_ground_weight;
    c[Gene::UavTargetAttraction] = air.target_weight;
    c[Gene::UavSpeed] = air.speed;
    c[Gene::GroundCohesionAir] = ground.cohesion_air_weight;
    c[Gene::GroundAlignmentAir] = ground.alignment_air_weight;
    return c;
}

void apply_chromosome(const Chromosome& c, AirParams& air, GroundParams& ground) {
    air.cohesion_air_weight = c[Gene::UavCohesionAir];
    air.alignment_air_weight = c[Gene::UavAlignmentAir];
    air.separation_distance = c[Gene::UavSeparationDistance];
    air.cohesion_ground_weight = c[Gene::UavCohesionGround];
    air.alignment_ground_weight = c[Gene::UavAlignmentGround];
    air.target_weight = c[Gene::UavTargetAttraction];
    air.speed = c[Gene::UavSpeed];
    ground.cohesion_air_weight = c[Gene::GroundCohesionAir];
    ground.alignment_air_weight = c[Gene::GroundAlignmentAir];
}

void DEConfig::validate() const {
    if (population < 4) throw std::invalid_argument("invalid config: de.population must be at least 4");
    if (generations < 1) throw std::invalid_argument("invalid config: de.generations must be at least 1");
    if (!(weight_factor > 0.0 && weight_factor <= 2.0)) {
        throw std::invalid_argument("invalid config: de.F must be in (0, 2]");
    }
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
        throw std::invalid_argument("invalid config: de.CR must be in [0, 1]");
    }
    if (!(targets_scale > 0.0)) {
        throw std::invalid_argument("invalid config: de.targets_scale must be positive");
    }
    if (!std::isfinite(connectivity_weight) || !std::isfinite(targets_weight)) {
        throw std::invalid_argument("invalid config: de fitness weights must be finite");
    }
    for (const auto& s : genes) {
        if (!(s.min < s.max)) {
            throw std::invalid_argument("invalid config: gene." + s.name + " needs min < max");
        }
    }
    sim.validate();
}

std::vector<Chromosome> init_population(const DEConfig& cfg, Rng& rng) {
    std::vector<Chromosome> pop(static_cast<std::size_t>(cfg.population));
    for (auto& c : pop) {
        for (int j = 0; j < kGeneCount; ++j) {
            const auto& s = cfg.genes[static_cast<std::size_t>(j)];
            c.genes[static_cast<std::size_t>(j)] = rng.uniform(s.min, s.max);
        }
    }
    return pop;
}

double fitness(const SimMetrics& m, const DEConfig& cfg) {
    return cfg.connectivity_weight * m.connectivity +
           cfg.targets_weight * (static_cast<double>(m.targets_reached) / cfg.targets_scale);
}

Evaluation evaluate(const Chromosome& c, const DEConfig& cfg) {
    SimConfig sim = cfg.sim;
    apply_chromosome(c, sim.air, sim.ground);
    const SimMetrics m = run(sim);
    return {c, m.targets_reached, m.connectivity, fitness(m, cfg)};
}

Chromosome donor(const Chromosome& r1, const Chromosome& r2, const Chromosome& r3, double F,
                 const GeneSpecs& specs) {
    Chromosome v;
    for (std::size_t j = 0; j < kGeneCount; ++j) {
        const double raw = r1.genes[j] + F * (r2.genes[j] - r3.genes[j]);
        v.genes[j] = std::clamp(raw, specs[j].min, specs[j].max);
    }
    return v;
}

Chromosome crossover(const Chromosome& target, const Chromosome& donor_vec, double crossover_rate,
                     Rng& rng, bool strict_eq9) {
    const std::size_t forced =
        strict_eq9 ? static_cast<std::size_t>(kGeneCount) : rng.index(kGeneCount);
    Chromosome trial;
    for (std::size_t j = 0; j < kGeneCount; ++j) {
        const bool from_donor = rng.next_double() <= crossover_rate || j == forced;
        trial.genes[j] = from_donor ? donor_vec.genes[j] : target.genes[j];
    }
    return trial;
}

const Evaluation& select(const Evaluation& target, const Evaluation& trial) {
    return trial.fitness > target.fitness ? trial : target;
}

namespace {

std::vector<Evaluation> evaluate_all(const std::vector<Chromosome>& candidates,
                                     const DEConfig& cfg, int parallel) {
    std::vector<Evaluation> out(candidates.size());
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(parallel, 1)), candidates.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < candidates.size(); ++i) out[i] = evaluate(candidates[i], cfg);
        return out;
    }
    // Index-addressed slots: completion order cannot change the result.
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= candidates.size()) break;
                try {
                    out[i] = evaluate(candidates[i], cfg);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

std::size_t argmax_by(const std::vector<Evaluation>& evals, auto key) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < evals.size(); ++i) {
        if (key(evals[i]) > key(evals[best])) best = i;  // ties keep the lower index
    }
    return best;
}

double average_fitness(const std::vector<Evaluation>& evals) {
    double sum = 0.0;
    for (const auto& e : evals) sum += e.fitness;
    return sum / static_cast<double>(evals.size());
}

// Puts the elite back unless its chromosome already survived selection; the
// slot sacrificed is the lowest-fitness one not claimed by another elite.
void reinsert_elite(std::vector<Evaluation>& evals, const Evaluation& elite,
                    std::vector<std::size_t>& claimed) {
    for (const auto& e : evals) {
        if (e.chromosome == elite.chromosome) return;
    }
    std::size_t worst = evals.size();
    for (std::size_t j = 0; j < evals.size(); ++j) {
        if (std::find(claimed.begin(), claimed.end(), j) != claimed.end()) continue;
        if (worst == evals.size() || evals[j].fitness < evals[worst].fitness) worst = j;
    }
    evals[worst] = elite;
    claimed.push_back(worst);
}

}  // namespace

EvolutionReport evolve(const DEConfig& cfg, int parallel, const GenerationObserver& observer) {
    cfg.validate();
    Rng rng(cfg.de_seed);
    const std::size_t n = static_cast<std::size_t>(cfg.population);

    std::vector<Chromosome> population = init_population(cfg, rng);
    std::vector<Evaluation> evals = evaluate_all(population, cfg, parallel);

    EvolutionReport report;
    report.initial_avg_fitness = average_fitness(evals);
    report.initial_best_fitness =
        evals[argmax_by(evals, [](const Evaluation& e) { return e.fitness; })].fitness;

    for (int g = 1; g <= cfg.generations; ++g) {
        const auto started = std::chrono::steady_clock::now();

        const Evaluation elite_targets =
            evals[argmax_by(evals, [](const Evaluation& e) { return e.targets_reached; })];
        const Evaluation elite_network =
            evals[argmax_by(evals, [](const Evaluation& e) { return e.connectivity; })];

        // Trial construction consumes the DE stream sequentially; evaluation
        // of the whole batch is the parallel part.
        std::vector<Chromosome> trials(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r[3];
            for (int k = 0; k < 3; ++k) {
                std::size_t pick;
                do {
                    pick = rng.index(n);
                } while (pick == i || (k > 0 && pick == r[0]) || (k > 1 && pick == r[1]));
                r[k] = pick;
            }
            const Chromosome d =
                donor(population[r[0]], population[r[1]], population[r[2]], cfg.weight_factor,
                      cfg.genes);
            trials[i] = crossover(population[i], d, cfg.crossover_rate, rng, cfg.strict_eq9);
        }
        const std::vector<Evaluation> trial_evals = evaluate_all(trials, cfg, parallel);
        for (std::size_t i = 0; i < n; ++i) evals[i] = select(evals[i], trial_evals[i]);

        std::vector<std::size_t> claimed;
        reinsert_elite(evals, elite_targets, claimed);
        reinsert_elite(evals, elite_network, claimed);

        for (std::size_t i = 0; i < n; ++i) population[i] = evals[i].chromosome;

        GenerationRecord rec;
        rec.generation = g;
        rec.avg_fitness = average_fitness(evals);
        rec.best_fitness =
            evals[argmax_by(evals, [](const Evaluation& e) { return e.fitness; })].fitness;
        rec.best_targets =
            evals[argmax_by(evals, [](const Evaluation& e) { return e.targets_reached; })]
                .targets_reached;
        rec.best_connectivity =
            evals[argmax_by(evals, [](const Evaluation& e) { return e.connectivity; })]
                .connectivity;
        rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        report.generations.push_back(rec);
        if (observer) observer(rec);
    }

    report.final_population = evals;
    report.best = evals[argmax_by(evals, [](const Evaluation& e) { return e.fitness; })];
    return report;
}

}  // namespace swarmsim
