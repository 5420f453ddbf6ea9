#include <doctest.h>

#include <stdexcept>

#include "divga/engine.hpp"
#include "divga/metrics.hpp"

using namespace divga;

namespace {

BenchmarkProblem one_max_ready() {
    auto problem = BenchmarkProblem::standard(ProblemId::one_max);
    initialize_oracle(problem);
    return problem;
}

GAConfig small_config(Method method) {
    GAConfig cfg;
    cfg.population_size = 40;
    cfg.max_generations = 20;
    cfg.method = method;
    return cfg;
}

Population converged_population(int size, const BitString& genes, double fitness) {
    Population population;
    for (int i = 0; i < size; ++i)
        population.push_back({genes, fitness});
    return population;
}

bool same_population(const Population& a, const Population& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].genes != b[i].genes || a[i].fitness != b[i].fitness)
            return false;
    return true;
}

} // namespace

TEST_CASE("config validation") {
    GAConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.population_size = 401;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.population_size = 400;
    cfg.p_c = 1.5;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.p_c = 1.0;
    cfg.num_preference_types = 6; // more types than tau_max + 1 admits
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("initial population is evaluated, seeded, and diverse") {
    const auto problem = one_max_ready();
    GAConfig cfg; // population 400
    Rng a(2024), b(2024);
    const Population p1 = init_population(cfg, problem, a);
    const Population p2 = init_population(cfg, problem, b);
    REQUIRE(p1.size() == 400);
    CHECK(same_population(p1, p2));
    for (const auto& ind : p1) {
        CHECK(ind.genes.length() == 45);
        CHECK(ind.fitness >= 0.0);
        CHECK(ind.fitness <= 45.0);
        CHECK(ind.fitness == problem.fitness(ind.genes));
    }
    const double div = diversity(p1);
    CHECK(div >= 0.48);
    CHECK(div <= 0.5);
}

TEST_CASE("adaptive step on a converged population changes nothing") {
    const auto problem = one_max_ready();
    GAConfig cfg = small_config(Method::adaptive);
    Rng gen(9);
    const BitString genes = BitString::random(45, gen);
    const Population population =
        converged_population(cfg.population_size, genes, problem.fitness(genes));

    PreferenceState state(cfg.num_preference_types);
    Rng selection(1), preference(2);
    const AdaptiveStep step =
        step_generation_adaptive(population, state, cfg, problem, selection, preference);
    CHECK(same_population(step.population, population));

    long long usage_total = 0;
    for (const long long u : step.type_usage)
        usage_total += u;
    CHECK(usage_total == cfg.population_size / 2);

    // clones cannot beat their parents, so every contribution collapses to 0
    for (const double c : state.contributions())
        CHECK(c == 0.0);
}

TEST_CASE("crossover probability zero only resamples existing genotypes") {
    const auto problem = one_max_ready();
    GAConfig cfg = small_config(Method::adaptive);
    cfg.p_c = 0.0;
    Rng init(33);
    const Population population = init_population(cfg, problem, init);
    PreferenceState state(cfg.num_preference_types);
    Rng selection(4), preference(5);
    const AdaptiveStep step =
        step_generation_adaptive(population, state, cfg, problem, selection, preference);
    for (const auto& child : step.population) {
        bool found = false;
        for (const auto& parent : population)
            if (parent.genes == child.genes) {
                found = true;
                break;
            }
        CHECK(found);
    }
    // no crossover happened, so no tallies either
    for (const long long c : state.cross_counts())
        CHECK(c == 0);
}

TEST_CASE("baseline stasis and full-flip edge cases") {
    const auto problem = one_max_ready();
    GAConfig cfg = small_config(Method::baseline);
    Rng gen(10);
    const BitString genes = BitString::random(45, gen);
    const Population population =
        converged_population(cfg.population_size, genes, problem.fitness(genes));

    cfg.p_m = 0.0;
    Rng selection(6);
    CHECK(same_population(step_generation_baseline(population, cfg, problem, selection),
                          population));

    cfg.p_m = 1.0;
    Rng selection2(7);
    const Population flipped = step_generation_baseline(population, cfg, problem, selection2);
    const BitString expectation = genes.complement();
    for (const auto& ind : flipped)
        CHECK(ind.genes == expectation);
}

TEST_CASE("a run counts evaluations per generation") {
    const auto problem = one_max_ready();
    GAConfig cfg = small_config(Method::adaptive);

    RunResult result = run(cfg, problem, 99);
    CHECK(result.evaluations ==
          static_cast<long long>(cfg.population_size) * (cfg.max_generations + 1));
    CHECK(result.traces.size() == static_cast<std::size_t>(cfg.max_generations) + 1);
    for (std::size_t g = 0; g < result.traces.size(); ++g)
        CHECK(result.traces[g].generation == static_cast<int>(g));

    cfg.max_generations = 0;
    RunResult initial_only = run(cfg, problem, 99);
    CHECK(initial_only.evaluations == cfg.population_size);
    CHECK(initial_only.traces.size() == 1);
}

TEST_CASE("runs are reproducible from their seed") {
    const auto problem = one_max_ready();
    const GAConfig cfg = small_config(Method::adaptive);
    const RunResult a = run(cfg, problem, 4242);
    const RunResult b = run(cfg, problem, 4242);
    CHECK(a.success == b.success);
    CHECK(a.first_success_generation == b.first_success_generation);
    CHECK(a.evaluations == b.evaluations);
    REQUIRE(a.traces.size() == b.traces.size());
    for (std::size_t g = 0; g < a.traces.size(); ++g) {
        CHECK(a.traces[g].best_fitness == b.traces[g].best_fitness);
        CHECK(a.traces[g].mean_fitness == b.traces[g].mean_fitness);
        CHECK(a.traces[g].diversity == b.traces[g].diversity);
        CHECK(a.traces[g].type_usage == b.traces[g].type_usage);
        CHECK(a.traces[g].contributions == b.traces[g].contributions);
    }
    const RunResult c = run(cfg, problem, 4243);
    CHECK(a.traces.back().mean_fitness != c.traces.back().mean_fitness);
}

TEST_CASE("baseline without mutation equals the adaptive method with one type") {
    // With a single preference type every pairing runs at tau 0, whose weight
    // is constant, so partner selection degenerates to a fitness tournament.
    // Preference draws live on their own stream, so both methods consume the
    // selection stream identically and must produce identical populations.
    const auto problem = one_max_ready();
    GAConfig baseline = small_config(Method::baseline);
    baseline.p_m = 0.0;
    GAConfig adaptive = small_config(Method::adaptive);
    adaptive.num_preference_types = 1;
    adaptive.mating.tau_max = 1;

    Rng init(2025);
    const Population start = init_population(baseline, problem, init);
    Population pop_baseline = start;
    Population pop_adaptive = start;
    PreferenceState state(1);
    Rng sel_baseline(555), sel_adaptive(555), preference(777);
    for (int gen = 0; gen < 15; ++gen) {
        pop_baseline =
            step_generation_baseline(pop_baseline, baseline, problem, sel_baseline);
        pop_adaptive = step_generation_adaptive(pop_adaptive, state, adaptive, problem,
                                                sel_adaptive, preference)
                           .population;
        REQUIRE(same_population(pop_baseline, pop_adaptive));
    }
}

TEST_CASE("recombination alone never invents new alleles at a converged position") {
    const auto problem = one_max_ready();
    GAConfig cfg = small_config(Method::adaptive);
    Rng init(77);
    Population population = init_population(cfg, problem, init);
    for (auto& ind : population) {
        BitString genes = ind.genes;
        genes.set_bit(0, true);
        ind = {genes, problem.fitness(genes)};
    }
    PreferenceState state(cfg.num_preference_types);
    Rng selection(8), preference(9);
    for (int gen = 0; gen < 10; ++gen) {
        population =
            step_generation_adaptive(population, state, cfg, problem, selection, preference)
                .population;
        for (const auto& ind : population)
            CHECK(ind.genes.bit(0));
    }
}

TEST_CASE("success in the initial population is generation zero") {
    auto problem = BenchmarkProblem::custom(ProblemId::one_max, 2, std::nullopt);
    initialize_oracle(problem);
    GAConfig cfg = small_config(Method::adaptive);
    cfg.population_size = 400; // virtually guarantees an all-ones draw
    cfg.max_generations = 3;
    const RunResult result = run(cfg, problem, 11);
    CHECK(result.success);
    CHECK(result.first_success_generation == 0);
}

TEST_CASE("population size is conserved across generations") {
    const auto problem = one_max_ready();
    const GAConfig cfg = small_config(Method::adaptive);
    Rng init(13);
    Population population = init_population(cfg, problem, init);
    PreferenceState state(cfg.num_preference_types);
    Rng selection(14), preference(15);
    for (int gen = 0; gen < 5; ++gen) {
        population =
            step_generation_adaptive(population, state, cfg, problem, selection, preference)
                .population;
        CHECK(population.size() == static_cast<std::size_t>(cfg.population_size));
    }
}
