#include "divga/controller.hpp"

#include <algorithm>
#include <stdexcept>

namespace divga {

PreferenceState::PreferenceState(int num_types) {
    if (num_types < 1)
        throw std::invalid_argument("number of preference types must be at least 1");
    contribution_.assign(static_cast<std::size_t>(num_types),
                         1.0 / static_cast<double>(num_types));
    cross_.assign(static_cast<std::size_t>(num_types), 0);
    succ_.assign(static_cast<std::size_t>(num_types), 0);
}

int PreferenceState::sample_preference(Rng& rng) const {
    double total = 0.0;
    for (const double c : contribution_)
        total += c + kSamplingFloor;
    const double x = uniform01(rng) * total;
    double cumulative = 0.0;
    for (std::size_t tau = 0; tau < contribution_.size(); ++tau) {
        cumulative += contribution_[tau] + kSamplingFloor;
        if (x < cumulative)
            return static_cast<int>(tau);
    }
    return num_types() - 1; // floating-point slack on the last boundary
}

void PreferenceState::record_crossover(int tau, std::pair<double, double> child_fitness,
                                       std::pair<double, double> parent_fitness) {
    if (tau < 0 || tau >= num_types())
        throw std::invalid_argument("preference type out of range");
    ++cross_[static_cast<std::size_t>(tau)];
    const double best_child = std::max(child_fitness.first, child_fitness.second);
    const double best_parent = std::max(parent_fitness.first, parent_fitness.second);
    if (best_child > best_parent)
        ++succ_[static_cast<std::size_t>(tau)];
}

void PreferenceState::end_generation() {
    for (std::size_t tau = 0; tau < contribution_.size(); ++tau) {
        if (cross_[tau] > 0)
            contribution_[tau] =
                static_cast<double>(succ_[tau]) / static_cast<double>(cross_[tau]);
        cross_[tau] = 0;
        succ_[tau] = 0;
    }
    ++generation_;
}

} // namespace divga
