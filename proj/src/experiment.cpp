#include <algorithm>
#include <stdexcept>

#include "divga/harness.hpp"
#include "divga/parallel.hpp"

namespace divga {

std::uint64_t run_seed(std::uint64_t base_seed, int run_index) {
    return derive_seed(base_seed, static_cast<std::uint64_t>(run_index));
}

namespace {

MeanTrace aggregate_traces(const std::vector<RunResult>& runs, const GAConfig& cfg) {
    std::size_t horizon = 0;
    for (const auto& r : runs)
        horizon = std::max(horizon, r.traces.size());

    const bool adaptive = cfg.method == Method::adaptive;
    const std::size_t types = static_cast<std::size_t>(cfg.num_preference_types);

    MeanTrace mean;
    mean.best_fitness.assign(horizon, 0.0);
    mean.mean_fitness.assign(horizon, 0.0);
    mean.diversity.assign(horizon, 0.0);
    if (adaptive) {
        mean.type_usage.assign(horizon, std::vector<double>(types, 0.0));
        mean.contributions.assign(horizon, std::vector<double>(types, 0.0));
    }
    std::vector<std::size_t> counts(horizon, 0);
    for (const auto& r : runs) {
        for (std::size_t g = 0; g < r.traces.size(); ++g) {
            const GenerationTrace& t = r.traces[g];
            mean.best_fitness[g] += t.best_fitness;
            mean.mean_fitness[g] += t.mean_fitness;
            mean.diversity[g] += t.diversity;
            if (adaptive)
                for (std::size_t k = 0; k < types; ++k) {
                    mean.type_usage[g][k] += static_cast<double>(t.type_usage[k]);
                    mean.contributions[g][k] += t.contributions[k];
                }
            ++counts[g];
        }
    }
    for (std::size_t g = 0; g < horizon; ++g) {
        const double n = static_cast<double>(counts[g]);
        mean.best_fitness[g] /= n;
        mean.mean_fitness[g] /= n;
        mean.diversity[g] /= n;
        if (adaptive)
            for (std::size_t k = 0; k < types; ++k) {
                mean.type_usage[g][k] /= n;
                mean.contributions[g][k] /= n;
            }
    }
    return mean;
}

} // namespace

ExperimentResult run_experiment(const GAConfig& cfg, const BenchmarkProblem& problem,
                                int num_runs, std::uint64_t base_seed, int workers,
                                double confidence) {
    cfg.validate();
    problem.require_oracle();
    if (num_runs < 1)
        throw std::invalid_argument("at least one run is required");

    ExperimentResult result;
    result.config = cfg;
    result.num_runs = num_runs;
    result.base_seed = base_seed;
    result.seeds.resize(static_cast<std::size_t>(num_runs));
    result.runs.resize(static_cast<std::size_t>(num_runs));
    for (int i = 0; i < num_runs; ++i)
        result.seeds[static_cast<std::size_t>(i)] = run_seed(base_seed, i);

    // Each run owns its seed-derived streams, so scheduling cannot leak into
    // the results; aggregation below is sequential in run order.
    parallel_for_index(static_cast<std::size_t>(num_runs), workers, [&](std::size_t i) {
        result.runs[i] = run(cfg, problem, result.seeds[i]);
    });

    double gen_sum = 0.0;
    for (const auto& r : result.runs)
        if (r.success) {
            ++result.successful_runs;
            gen_sum += static_cast<double>(*r.first_success_generation);
        }
    if (result.successful_runs > 0)
        result.mean_first_success_generation =
            gen_sum / static_cast<double>(result.successful_runs);
    result.mean_trace = aggregate_traces(result.runs, cfg);
    result.effort = computational_effort(result.runs, cfg.population_size, confidence,
                                         cfg.max_generations);
    result.avfe_value = avfe(result.runs);
    result.quotient = performance_quotient(result.runs);
    return result;
}

} // namespace divga
