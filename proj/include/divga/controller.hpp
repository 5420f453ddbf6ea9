#pragma once

#include <utility>
#include <vector>

#include "divga/rng.hpp"

namespace divga {

/// Adaptation memory for preference-type selection. Per generation it tallies
/// crossovers and successful crossovers (a child strictly fitter than both
/// parents) for each type; the resulting success ratios become the sampling
/// weights for the next generation's pairings.
class PreferenceState {
public:
    /// Additive sampling floor: a type whose measured contribution hits zero
    /// would otherwise never be drawn again and so never be re-evaluated.
    static constexpr double kSamplingFloor = 0.01;

    explicit PreferenceState(int num_types);

    int num_types() const noexcept { return static_cast<int>(contribution_.size()); }
    int generation() const noexcept { return generation_; }
    const std::vector<double>& contributions() const noexcept { return contribution_; }
    const std::vector<long long>& cross_counts() const noexcept { return cross_; }
    const std::vector<long long>& success_counts() const noexcept { return succ_; }

    /// Draws a type with probability proportional to contribution + floor.
    int sample_preference(Rng& rng) const;

    /// Tallies one crossover under `tau`. Success means some child's fitness
    /// strictly exceeds both parents' fitnesses.
    void record_crossover(int tau, std::pair<double, double> child_fitness,
                          std::pair<double, double> parent_fitness);

    /// Refreshes contributions from this generation's tallies (types with no
    /// crossovers keep their previous value), resets the tallies, and
    /// advances the generation counter.
    void end_generation();

private:
    std::vector<double> contribution_;
    std::vector<long long> cross_;
    std::vector<long long> succ_;
    int generation_ = 0;
};

} // namespace divga
