#pragma once

#include <cstddef>
#include <span>

#include "divga/population.hpp"
#include "divga/rng.hpp"

namespace divga {

struct MatingParams {
    int tau_max = 3;
    int tournament_size = 3;
};

/// Selection weight of a candidate at normalized distance d under preference
/// type tau: 0.5 + (tau/tau_max) * (d - 0.5). Constant 0.5 at tau = 0, the
/// identity in d at tau = tau_max; always within [0, 1].
double difference_function(int tau, double d, int tau_max);

/// Fitness tournament: draws tournament_size indices uniformly with
/// replacement and returns the fittest, ties broken uniformly at random.
std::size_t select_first_parent(const Population& population, const MatingParams& params,
                                Rng& rng);

/// Partner tournament: candidates are drawn uniformly with replacement from
/// the whole population (the first parent is not excluded) and scored by
/// fitness times the difference function of their distance to the first
/// parent. Requires non-negative fitness for the product ordering to mean
/// anything.
std::size_t select_partner(const Population& population, std::size_t first_index, int tau,
                           const MatingParams& params, Rng& rng);

/// Fixed-candidate variants: identical scoring, but the tournament draw is
/// supplied by the caller. Tie-break draws still come from rng.
std::size_t select_first_parent_among(const Population& population,
                                      std::span<const std::size_t> candidates, Rng& rng);
std::size_t select_partner_among(const Population& population, std::size_t first_index,
                                 std::span<const std::size_t> candidates, int tau,
                                 const MatingParams& params, Rng& rng);

} // namespace divga
