#include "divga/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "divga/metrics.hpp"

namespace divga {

namespace {

constexpr std::uint64_t kInitStream = 0x01;
constexpr std::uint64_t kSelectionStream = 0x02;
constexpr std::uint64_t kPreferenceStream = 0x03;

void require_population_matches(const Population& population, const GAConfig& cfg,
                                const BenchmarkProblem& problem) {
    if (population.size() != static_cast<std::size_t>(cfg.population_size))
        throw std::invalid_argument("population size does not match configuration");
    for (const auto& ind : population)
        if (ind.genes.length() != problem.length())
            throw std::invalid_argument("chromosome length does not match problem");
}

std::pair<BitString, BitString> recombine(const Population& population, std::size_t p1,
                                          std::size_t p2, const GAConfig& cfg, Rng& rng,
                                          bool& crossed) {
    crossed = cfg.p_c >= 1.0 || uniform01(rng) < cfg.p_c;
    if (!crossed)
        return {population[p1].genes, population[p2].genes};
    return one_point_crossover(population[p1].genes, population[p2].genes, rng);
}

GenerationTrace make_trace(int generation, const Population& population,
                           const std::vector<long long>& usage,
                           const std::vector<double>& contributions) {
    double best = population.front().fitness;
    double sum = 0.0;
    for (const auto& ind : population) {
        best = std::max(best, ind.fitness);
        sum += ind.fitness;
    }
    return {generation, best, sum / static_cast<double>(population.size()),
            diversity(population), usage, contributions};
}

} // namespace

void GAConfig::validate() const {
    if (population_size < 2 || population_size % 2 != 0)
        throw std::invalid_argument("population size must be a positive even number");
    if (max_generations < 0)
        throw std::invalid_argument("max_generations must be non-negative");
    if (p_m < 0.0 || p_m > 1.0)
        throw std::invalid_argument("mutation rate must lie in [0, 1]");
    if (p_c < 0.0 || p_c > 1.0)
        throw std::invalid_argument("crossover probability must lie in [0, 1]");
    if (mating.tournament_size < 1)
        throw std::invalid_argument("tournament size must be at least 1");
    if (mating.tau_max < 1)
        throw std::invalid_argument("tau_max must be at least 1");
    if (num_preference_types < 1)
        throw std::invalid_argument("number of preference types must be at least 1");
    if (num_preference_types - 1 > mating.tau_max)
        throw std::invalid_argument("preference types exceed tau_max");
}

Population init_population(const GAConfig& cfg, const BenchmarkProblem& problem, Rng& rng) {
    cfg.validate();
    Population population;
    population.reserve(static_cast<std::size_t>(cfg.population_size));
    for (int i = 0; i < cfg.population_size; ++i) {
        BitString genes = BitString::random(problem.length(), rng);
        const double f = problem.fitness(genes);
        population.push_back({std::move(genes), f});
    }
    return population;
}

AdaptiveStep step_generation_adaptive(const Population& population, PreferenceState& state,
                                      const GAConfig& cfg, const BenchmarkProblem& problem,
                                      Rng& selection_rng, Rng& preference_rng) {
    require_population_matches(population, cfg, problem);
    Population next;
    next.reserve(population.size());
    std::vector<long long> usage(static_cast<std::size_t>(state.num_types()), 0);
    const int pairings = cfg.population_size / 2;
    for (int pair = 0; pair < pairings; ++pair) {
        const int tau = state.sample_preference(preference_rng);
        ++usage[static_cast<std::size_t>(tau)];
        const std::size_t p1 = select_first_parent(population, cfg.mating, selection_rng);
        const std::size_t p2 = select_partner(population, p1, tau, cfg.mating, selection_rng);
        bool crossed = false;
        auto children = recombine(population, p1, p2, cfg, selection_rng, crossed);
        const double f1 = problem.fitness(children.first);
        const double f2 = problem.fitness(children.second);
        if (crossed)
            state.record_crossover(tau, {f1, f2},
                                   {population[p1].fitness, population[p2].fitness});
        next.push_back({std::move(children.first), f1});
        next.push_back({std::move(children.second), f2});
    }
    state.end_generation();
    return {std::move(next), std::move(usage)};
}

Population step_generation_baseline(const Population& population, const GAConfig& cfg,
                                    const BenchmarkProblem& problem, Rng& selection_rng) {
    require_population_matches(population, cfg, problem);
    Population next;
    next.reserve(population.size());
    const int pairings = cfg.population_size / 2;
    for (int pair = 0; pair < pairings; ++pair) {
        const std::size_t p1 = select_first_parent(population, cfg.mating, selection_rng);
        const std::size_t p2 = select_first_parent(population, cfg.mating, selection_rng);
        bool crossed = false;
        auto children = recombine(population, p1, p2, cfg, selection_rng, crossed);
        BitString c1 = mutate(children.first, cfg.p_m, selection_rng);
        BitString c2 = mutate(children.second, cfg.p_m, selection_rng);
        const double f1 = problem.fitness(c1);
        const double f2 = problem.fitness(c2);
        next.push_back({std::move(c1), f1});
        next.push_back({std::move(c2), f2});
    }
    return next;
}

RunResult run(const GAConfig& cfg, const BenchmarkProblem& problem, std::uint64_t seed) {
    cfg.validate();
    problem.require_oracle();

    Rng init_rng(derive_seed(seed, kInitStream));
    Rng selection_rng(derive_seed(seed, kSelectionStream));
    Rng preference_rng(derive_seed(seed, kPreferenceStream));

    const bool adaptive = cfg.method == Method::adaptive;
    const std::size_t types = static_cast<std::size_t>(cfg.num_preference_types);

    RunResult result;
    result.population_size = cfg.population_size;
    result.traces.reserve(static_cast<std::size_t>(cfg.max_generations) + 1);

    Population population = init_population(cfg, problem, init_rng);
    result.evaluations = cfg.population_size;

    PreferenceState state(cfg.num_preference_types);
    const std::vector<long long> no_usage(adaptive ? types : 0, 0);
    result.traces.push_back(make_trace(
        0, population, no_usage,
        adaptive ? state.contributions() : std::vector<double>{}));

    auto note_success = [&](int generation, double best) {
        if (!result.first_success_generation && problem.is_success(best))
            result.first_success_generation = generation;
    };
    note_success(0, result.traces.back().best_fitness);

    for (int gen = 1; gen <= cfg.max_generations; ++gen) {
        if (adaptive) {
            AdaptiveStep step =
                step_generation_adaptive(population, state, cfg, problem, selection_rng,
                                         preference_rng);
            population = std::move(step.population);
            result.traces.push_back(
                make_trace(gen, population, step.type_usage, state.contributions()));
        } else {
            population = step_generation_baseline(population, cfg, problem, selection_rng);
            result.traces.push_back(make_trace(gen, population, {}, {}));
        }
        result.evaluations += cfg.population_size;
        note_success(gen, result.traces.back().best_fitness);
        if (cfg.early_stop && result.first_success_generation)
            break;
    }
    result.success = result.first_success_generation.has_value();
    return result;
}

} // namespace divga
