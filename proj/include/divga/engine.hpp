#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "divga/controller.hpp"
#include "divga/mating.hpp"
#include "divga/population.hpp"
#include "divga/problems.hpp"
#include "divga/rng.hpp"

namespace divga {

enum class Method { adaptive, baseline };

struct GAConfig {
    int population_size = 400;
    int max_generations = 200;
    Method method = Method::adaptive;
    double p_m = 0.0; // baseline only; the adaptive method never mutates
    double p_c = 1.0;
    MatingParams mating{};
    int num_preference_types = 4; // adaptive only
    bool early_stop = false;

    void validate() const;
};

struct GenerationTrace {
    int generation;
    double best_fitness;
    double mean_fitness;
    double diversity;
    std::vector<long long> type_usage;   // adaptive: one type draw per pairing
    std::vector<double> contributions;   // adaptive: values after this generation's update
};

struct RunResult {
    bool success = false;
    std::optional<int> first_success_generation; // generation 0 is the initial population
    long long evaluations = 0;
    int population_size = 0;
    std::vector<GenerationTrace> traces;
};

/// Random initial population with fitness attached.
Population init_population(const GAConfig& cfg, const BenchmarkProblem& problem, Rng& rng);

struct AdaptiveStep {
    Population population;
    std::vector<long long> type_usage;
};

/// One generation of the adaptive method: per pairing, draw a preference type
/// from `preference_rng`, pick the first parent by fitness tournament and the
/// partner by difference-weighted tournament, recombine, evaluate, and tally
/// the crossover for the type. Full generational replacement, no mutation.
/// Preference draws use their own stream so the selection/crossover draw
/// sequence stays comparable with the baseline method.
AdaptiveStep step_generation_adaptive(const Population& population, PreferenceState& state,
                                      const GAConfig& cfg, const BenchmarkProblem& problem,
                                      Rng& selection_rng, Rng& preference_rng);

/// One generation of the non-adaptive baseline: both parents by plain fitness
/// tournament, children mutated bitwise at p_m after crossover.
Population step_generation_baseline(const Population& population, const GAConfig& cfg,
                                    const BenchmarkProblem& problem, Rng& selection_rng);

/// A full seeded run: initial population plus up to max_generations steps,
/// with per-generation traces and the first generation reaching the grid
/// optimum. Identical (cfg, problem, seed) triples give identical results.
RunResult run(const GAConfig& cfg, const BenchmarkProblem& problem, std::uint64_t seed);

} // namespace divga
