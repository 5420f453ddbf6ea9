#include "divga/mating.hpp"

#include <stdexcept>

namespace divga {

namespace {

void require_population(const Population& population) {
    if (population.empty())
        throw std::invalid_argument("population is empty");
}

/// Argmax over `count` candidates produced by next(t), scored by score(idx).
/// Ties are resolved by reservoir sampling, so every maximal draw is equally
/// likely and no extra randomness is consumed unless a tie occurs.
template <typename Next, typename Score>
std::size_t tournament_argmax(int count, Next&& next, Score&& score, Rng& rng) {
    std::size_t best = next(0);
    double best_score = score(best);
    int ties = 1;
    for (int t = 1; t < count; ++t) {
        const std::size_t idx = next(t);
        const double s = score(idx);
        if (s > best_score) {
            best = idx;
            best_score = s;
            ties = 1;
        } else if (s == best_score) {
            ++ties;
            if (uniform_index(rng, static_cast<std::size_t>(ties)) == 0)
                best = idx;
        }
    }
    return best;
}

} // namespace

double difference_function(int tau, double d, int tau_max) {
    if (tau_max < 1)
        throw std::invalid_argument("tau_max must be at least 1");
    if (tau < 0 || tau > tau_max)
        throw std::invalid_argument("preference type out of range");
    if (d < 0.0 || d > 1.0)
        throw std::invalid_argument("normalized difference out of range");
    return 0.5 + (static_cast<double>(tau) / static_cast<double>(tau_max)) * (d - 0.5);
}

std::size_t select_first_parent(const Population& population, const MatingParams& params,
                                Rng& rng) {
    require_population(population);
    return tournament_argmax(
        params.tournament_size, [&](int) { return uniform_index(rng, population.size()); },
        [&](std::size_t idx) { return population[idx].fitness; }, rng);
}

std::size_t select_partner(const Population& population, std::size_t first_index, int tau,
                           const MatingParams& params, Rng& rng) {
    require_population(population);
    const BitString& first = population[first_index].genes;
    return tournament_argmax(
        params.tournament_size, [&](int) { return uniform_index(rng, population.size()); },
        [&](std::size_t idx) {
            const double d = normalized_difference(population[idx].genes, first);
            return population[idx].fitness * difference_function(tau, d, params.tau_max);
        },
        rng);
}

std::size_t select_first_parent_among(const Population& population,
                                      std::span<const std::size_t> candidates, Rng& rng) {
    require_population(population);
    if (candidates.empty())
        throw std::invalid_argument("candidate set is empty");
    return tournament_argmax(
        static_cast<int>(candidates.size()), [&](int t) { return candidates[t]; },
        [&](std::size_t idx) { return population[idx].fitness; }, rng);
}

std::size_t select_partner_among(const Population& population, std::size_t first_index,
                                 std::span<const std::size_t> candidates, int tau,
                                 const MatingParams& params, Rng& rng) {
    require_population(population);
    if (candidates.empty())
        throw std::invalid_argument("candidate set is empty");
    const BitString& first = population[first_index].genes;
    return tournament_argmax(
        static_cast<int>(candidates.size()), [&](int t) { return candidates[t]; },
        [&](std::size_t idx) {
            const double d = normalized_difference(population[idx].genes, first);
            return population[idx].fitness * difference_function(tau, d, params.tau_max);
        },
        rng);
}

} // namespace divga
