#pragma once

#include <optional>
#include <span>
#include <vector>

#include "divga/engine.hpp"
#include "divga/population.hpp"

namespace divga {

/// Mean pairwise Hamming distance over all ordered pairs (self-pairs
/// included, contributing zero), normalized by chromosome length. Ranges over
/// [0, 0.5]: 0 for a converged population, 0.5 when every bit position is
/// split evenly.
double diversity(const Population& population);

/// Fraction of runs that succeeded no later than `generation`.
double success_probability(std::span<const RunResult> results, int generation);

/// Independent runs needed for confidence z of at least one success when a
/// single run succeeds with probability p: ceil(log(1-z) / log(1-p)). The log
/// base cancels in the ratio. Returns nullopt at p = 0 (no finite number of
/// runs helps); p = 1 gives 1.
std::optional<long long> runs_required(double p, double z);

struct EffortRow {
    int generation;
    double p;
    std::optional<long long> runs;        // undefined while p == 0
    std::optional<long long> individuals; // M * (generation + 1) * runs
};

struct EffortTable {
    std::vector<EffortRow> rows;
    std::optional<long long> effort; // min individuals over generations; nullopt if no run succeeded
    std::optional<int> i_star;       // smallest minimizing generation
    int successful_runs = 0;
    int population_size = 0;
    double confidence = 0.0;
};

/// Computational-effort table over generations 0..max_generation. The
/// individuals column counts the initial population as one evaluated
/// generation, i.e. I = M * (i + 1) * R.
EffortTable computational_effort(std::span<const RunResult> results, int population_size,
                                 double confidence, int max_generation);

/// Mean fitness evaluations spent by successful runs up to their first
/// success; nullopt when no run succeeded.
std::optional<double> avfe(std::span<const RunResult> results);

/// avfe divided by the success fraction; higher is worse.
std::optional<double> performance_quotient(std::span<const RunResult> results);

} // namespace divga
