#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "divga/engine.hpp"
#include "divga/metrics.hpp"
#include "divga/problems.hpp"

namespace divga {

/// A parsed experiment description: one problem, one method (or a list of
/// mutation rates for baseline sweeps), repeated-run count and seeding.
struct ExperimentSpec {
    ProblemId problem = ProblemId::one_max;
    Method method = Method::adaptive;
    std::vector<double> p_m_values; // baseline mutation rates; empty means {0.0}
    GAConfig ga;                    // method and p_m are filled in per planned experiment
    int num_runs = 500;
    std::uint64_t base_seed = 0;
    std::string output_dir = "out";
};

/// Reads a key = value config file. Unknown or duplicate keys and constraint
/// violations are hard errors naming the offending key.
ExperimentSpec parse_config(const std::filesystem::path& path);

struct PlannedExperiment {
    std::string label; // "adaptive" or "pm_<rate>"
    GAConfig config;
};

/// The single experiment described by the spec's method (baseline specs must
/// carry exactly one mutation rate).
PlannedExperiment single_plan(const ExperimentSpec& spec);

/// One baseline experiment per mutation rate, followed by the adaptive
/// method.
std::vector<PlannedExperiment> sweep_plan(const ExperimentSpec& spec);

/// Seed of run `run_index`; distinct per index, and adding runs never
/// changes the seeds of earlier ones.
std::uint64_t run_seed(std::uint64_t base_seed, int run_index);

/// Per-generation columns averaged over all runs (successful or not).
struct MeanTrace {
    std::vector<double> best_fitness;
    std::vector<double> mean_fitness;
    std::vector<double> diversity;
    std::vector<std::vector<double>> type_usage;    // [generation][type], adaptive only
    std::vector<std::vector<double>> contributions; // [generation][type], adaptive only
};

struct ExperimentResult {
    GAConfig config;
    int num_runs = 0;
    std::uint64_t base_seed = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<RunResult> runs;
    MeanTrace mean_trace;
    EffortTable effort;
    int successful_runs = 0;
    std::optional<double> mean_first_success_generation;
    std::optional<double> avfe_value;
    std::optional<double> quotient;
};

/// Runs num_runs independent seeded runs (parallel across runs) and
/// aggregates the derived metrics. Output is identical for any worker count.
ExperimentResult run_experiment(const GAConfig& cfg, const BenchmarkProblem& problem,
                                int num_runs, std::uint64_t base_seed, int workers,
                                double confidence = 0.99);

// ---- CSV emission (fixed schemas; floats carry 6 significant digits) ----

void write_runs_csv(const std::filesystem::path& path, const ExperimentResult& result);
void write_trace_csv(const std::filesystem::path& path, const ExperimentResult& result);
void write_effort_csv(const std::filesystem::path& path, const EffortTable& table);
void write_comparison_csv(
    const std::filesystem::path& path,
    std::span<const std::pair<std::string, const ExperimentResult*>> experiments);

/// Reads a runs.csv back into skeleton results (traces are not stored).
std::vector<RunResult> read_runs_csv(const std::filesystem::path& path);

// ---- Oracle cache ----

struct OracleRecord {
    std::string problem;
    std::optional<double> f_max; // absent for maximization problems
    double optimum_fitness = 0.0;
    std::string witness;
};

std::vector<OracleRecord> load_oracle_cache(const std::filesystem::path& path);

/// Installs the cached oracle for the problem, or computes it and appends a
/// record. A cached record that fails validation against the problem is a
/// hard error; the cache is never silently rewritten.
void ensure_oracle(BenchmarkProblem& problem, const std::filesystem::path& cache_path,
                   int workers);

void precompute_oracles(std::span<const ProblemId> ids, const std::filesystem::path& cache_path,
                        int workers);

} // namespace divga
