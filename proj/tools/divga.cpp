#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divga/harness.hpp"
#include "divga/parallel.hpp"

namespace fs = std::filesystem;
using namespace divga;

namespace {

std::string opt_str(const std::optional<long long>& v) {
    return v ? std::to_string(*v) : std::string("-");
}

std::string opt_str(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("-");
}

std::string opt_g6(const std::optional<double>& v) {
    if (!v)
        return "-";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", *v);
    return buf;
}

void print_summary(const std::string& label, const ExperimentResult& result) {
    std::cout << label << ": N=" << result.successful_runs << "/" << result.num_runs
              << " gen=" << opt_g6(result.mean_first_success_generation)
              << " i_star=" << opt_str(result.effort.i_star)
              << " effort=" << opt_str(result.effort.effort)
              << " avfe=" << opt_g6(result.avfe_value)
              << " quotient=" << opt_g6(result.quotient) << "\n";
}

void write_experiment_files(const fs::path& dir, const ExperimentResult& result) {
    write_runs_csv(dir / "runs.csv", result);
    write_trace_csv(dir / "trace.csv", result);
    write_effort_csv(dir / "effort.csv", result.effort);
}

std::vector<ProblemId> parse_problem_list(const std::string& list) {
    std::vector<ProblemId> ids;
    if (list == "all") {
        for (const ProblemId id : all_problem_ids())
            ids.push_back(id);
        return ids;
    }
    std::string item;
    std::stringstream ss(list);
    while (std::getline(ss, item, ',')) {
        const auto id = problem_id_from_string(item);
        if (!id)
            throw std::runtime_error("unknown problem '" + item + "'");
        ids.push_back(*id);
    }
    if (ids.empty())
        throw std::runtime_error("no problems given");
    return ids;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genetic-algorithm experiment harness with self-adaptive "
                 "diversity control via preference-type mating"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_override;
    std::string cache_path = "oracle_cache.txt";
    int workers = 0;

    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        auto* cfg = cmd->add_option("--config", config_path, "experiment config file");
        if (needs_config)
            cfg->required();
        cmd->add_option("--out", out_override, "output directory (overrides config)");
        cmd->add_option("--workers", workers, "worker threads (default: host parallelism)");
        cmd->add_option("--cache", cache_path, "oracle cache file");
    };

    auto* oracle_cmd = app.add_subcommand("oracle", "compute and cache grid oracles");
    std::string problems_arg = "all";
    oracle_cmd->add_option("--problems", problems_arg,
                           "comma-separated problem ids, or 'all'");
    oracle_cmd->add_option("--cache", cache_path, "oracle cache file");
    oracle_cmd->add_option("--workers", workers, "worker threads");

    auto* run_cmd = app.add_subcommand("run", "run one experiment from a config file");
    add_common(run_cmd, true);

    auto* sweep_cmd = app.add_subcommand(
        "sweep", "run every configured baseline mutation rate plus the adaptive method");
    add_common(sweep_cmd, true);

    auto* effort_cmd =
        app.add_subcommand("effort", "recompute the effort table from a stored runs.csv");
    std::string runs_csv;
    int population_size = 400;
    int max_generations = -1;
    double confidence = 0.99;
    effort_cmd->add_option("--runs-csv", runs_csv, "stored runs.csv")->required();
    effort_cmd->add_option("--population-size", population_size, "population size M");
    effort_cmd->add_option("--confidence", confidence, "confidence z");
    effort_cmd->add_option("--max-generations", max_generations,
                           "last generation row (default: last observed success)");
    effort_cmd->add_option("--out", out_override, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (oracle_cmd->parsed()) {
            for (const ProblemId id : parse_problem_list(problems_arg)) {
                BenchmarkProblem problem = BenchmarkProblem::standard(id);
                ensure_oracle(problem, cache_path, workers);
                std::cout << to_string(id) << ": f_max="
                          << (problem.shift_constant() ? std::to_string(*problem.shift_constant())
                                                       : std::string("none"))
                          << " optimum_fitness=" << problem.optimum_fitness() << "\n";
            }
            return 0;
        }

        if (run_cmd->parsed() || sweep_cmd->parsed()) {
            ExperimentSpec spec = parse_config(config_path);
            if (!out_override.empty())
                spec.output_dir = out_override;
            BenchmarkProblem problem = BenchmarkProblem::standard(spec.problem);
            ensure_oracle(problem, cache_path, workers);
            const fs::path out_dir = spec.output_dir;

            if (run_cmd->parsed()) {
                const PlannedExperiment plan = single_plan(spec);
                const ExperimentResult result = run_experiment(
                    plan.config, problem, spec.num_runs, spec.base_seed, workers);
                write_experiment_files(out_dir, result);
                print_summary(plan.label, result);
                return 0;
            }

            std::vector<ExperimentResult> results;
            std::vector<std::pair<std::string, const ExperimentResult*>> rows;
            const auto plans = sweep_plan(spec);
            results.reserve(plans.size());
            for (const PlannedExperiment& plan : plans) {
                results.push_back(run_experiment(plan.config, problem, spec.num_runs,
                                                 spec.base_seed, workers));
                write_experiment_files(out_dir / plan.label, results.back());
                print_summary(plan.label, results.back());
            }
            for (std::size_t i = 0; i < plans.size(); ++i)
                rows.emplace_back(plans[i].label, &results[i]);
            write_comparison_csv(out_dir / "comparison.csv", rows);
            return 0;
        }

        if (effort_cmd->parsed()) {
            std::vector<RunResult> runs = read_runs_csv(runs_csv);
            for (auto& r : runs)
                r.population_size = population_size;
            int horizon = max_generations;
            if (horizon < 0) {
                horizon = 0;
                for (const auto& r : runs)
                    if (r.first_success_generation)
                        horizon = std::max(horizon, *r.first_success_generation);
            }
            const EffortTable table =
                computational_effort(runs, population_size, confidence, horizon);
            const fs::path dir =
                out_override.empty() ? fs::path(runs_csv).parent_path() : fs::path(out_override);
            write_effort_csv(dir / "effort.csv", table);
            std::cout << "effort=" << opt_str(table.effort)
                      << " i_star=" << opt_str(table.i_star) << " N=" << table.successful_runs
                      << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
