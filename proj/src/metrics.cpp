#include "divga/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace divga {

double diversity(const Population& population) {
    if (population.empty())
        throw std::invalid_argument("population is empty");
    const std::size_t l = population.front().genes.length();
    const std::size_t n = population.size();
    // Per bit position p with c ones, ordered pairs disagree 2*c*(n-c) times;
    // summing over positions equals the double sum over all ordered pairs.
    std::vector<std::size_t> ones(l, 0);
    for (const auto& ind : population) {
        if (ind.genes.length() != l)
            throw std::invalid_argument("mixed chromosome lengths in population");
        for (std::size_t p = 0; p < l; ++p)
            ones[p] += ind.genes.bit(p);
    }
    double disagreements = 0.0;
    for (const std::size_t c : ones)
        disagreements += 2.0 * static_cast<double>(c) * static_cast<double>(n - c);
    return disagreements /
           (static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(l));
}

double success_probability(std::span<const RunResult> results, int generation) {
    if (results.empty())
        throw std::invalid_argument("no run results");
    std::size_t hits = 0;
    for (const auto& r : results)
        if (r.success && r.first_success_generation && *r.first_success_generation <= generation)
            ++hits;
    return static_cast<double>(hits) / static_cast<double>(results.size());
}

std::optional<long long> runs_required(double p, double z) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("success probability out of range");
    if (z <= 0.0 || z >= 1.0)
        throw std::invalid_argument("confidence must lie strictly between 0 and 1");
    if (p == 0.0)
        return std::nullopt;
    if (p == 1.0)
        return 1;
    const double ratio = std::log(1.0 - z) / std::log(1.0 - p);
    // The 1e-9 slack keeps mathematically-integer ratios from ceiling up by
    // one floating-point ulp.
    const double ceiled = std::ceil(ratio - 1e-9);
    return std::max(1LL, static_cast<long long>(ceiled));
}

EffortTable computational_effort(std::span<const RunResult> results, int population_size,
                                 double confidence, int max_generation) {
    if (results.empty())
        throw std::invalid_argument("no run results");
    if (population_size < 1)
        throw std::invalid_argument("population size must be positive");
    EffortTable table;
    table.population_size = population_size;
    table.confidence = confidence;
    for (const auto& r : results)
        if (r.success)
            ++table.successful_runs;
    table.rows.reserve(static_cast<std::size_t>(max_generation) + 1);
    for (int i = 0; i <= max_generation; ++i) {
        EffortRow row{i, success_probability(results, i), std::nullopt, std::nullopt};
        if (row.p > 0.0) {
            row.runs = runs_required(row.p, confidence);
            row.individuals = static_cast<long long>(population_size) * (i + 1) * *row.runs;
            if (!table.effort || *row.individuals < *table.effort) {
                table.effort = row.individuals;
                table.i_star = i;
            }
        }
        table.rows.push_back(row);
    }
    return table;
}

std::optional<double> avfe(std::span<const RunResult> results) {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& r : results) {
        if (!r.success || !r.first_success_generation)
            continue;
        sum += static_cast<double>(r.population_size) *
               static_cast<double>(*r.first_success_generation + 1);
        ++count;
    }
    if (count == 0)
        return std::nullopt;
    return sum / static_cast<double>(count);
}

std::optional<double> performance_quotient(std::span<const RunResult> results) {
    const auto mean_evals = avfe(results);
    if (!mean_evals || results.empty())
        return std::nullopt;
    std::size_t hits = 0;
    for (const auto& r : results)
        if (r.success)
            ++hits;
    const double success_fraction =
        static_cast<double>(hits) / static_cast<double>(results.size());
    return *mean_evals / success_fraction;
}

} // namespace divga
