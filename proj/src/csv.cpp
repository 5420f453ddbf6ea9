#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "divga/harness.hpp"

namespace divga {

namespace {

std::string g6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::filesystem::path& path) {
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot write file: " + path.string());
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ','))
        fields.push_back(item);
    return fields;
}

} // namespace

void write_runs_csv(const std::filesystem::path& path, const ExperimentResult& result) {
    std::ofstream out = open_out(path);
    out << "run,seed,success,first_success_gen,evaluations\n";
    for (std::size_t i = 0; i < result.runs.size(); ++i) {
        const RunResult& r = result.runs[i];
        out << i << ',' << result.seeds[i] << ',' << (r.success ? 1 : 0) << ',';
        if (r.first_success_generation)
            out << *r.first_success_generation;
        else
            out << '-';
        out << ',' << r.evaluations << '\n';
    }
}

void write_trace_csv(const std::filesystem::path& path, const ExperimentResult& result) {
    std::ofstream out = open_out(path);
    const bool adaptive = result.config.method == Method::adaptive;
    const std::size_t types = static_cast<std::size_t>(result.config.num_preference_types);
    out << "generation,mean_best_fitness,mean_mean_fitness,mean_diversity";
    if (adaptive) {
        for (std::size_t k = 0; k < types; ++k)
            out << ",usage_t" << k;
        for (std::size_t k = 0; k < types; ++k)
            out << ",contrib_t" << k;
    }
    out << '\n';
    const MeanTrace& m = result.mean_trace;
    for (std::size_t g = 0; g < m.best_fitness.size(); ++g) {
        out << g << ',' << g6(m.best_fitness[g]) << ',' << g6(m.mean_fitness[g]) << ','
            << g6(m.diversity[g]);
        if (adaptive) {
            for (std::size_t k = 0; k < types; ++k)
                out << ',' << g6(m.type_usage[g][k]);
            for (std::size_t k = 0; k < types; ++k)
                out << ',' << g6(m.contributions[g][k]);
        }
        out << '\n';
    }
}

void write_effort_csv(const std::filesystem::path& path, const EffortTable& table) {
    std::ofstream out = open_out(path);
    out << "generation,P,R,I\n";
    for (const EffortRow& row : table.rows) {
        out << row.generation << ',' << g6(row.p) << ',';
        if (row.runs)
            out << *row.runs;
        else
            out << '-';
        out << ',';
        if (row.individuals)
            out << *row.individuals;
        else
            out << '-';
        out << '\n';
    }
    out << "effort,";
    if (table.effort)
        out << *table.effort;
    else
        out << '-';
    out << ",i_star,";
    if (table.i_star)
        out << *table.i_star;
    else
        out << '-';
    out << ",N," << table.successful_runs << '\n';
}

void write_comparison_csv(
    const std::filesystem::path& path,
    std::span<const std::pair<std::string, const ExperimentResult*>> experiments) {
    std::ofstream out = open_out(path);
    out << "method,gen,i_star,effort,N,avfe,quotient\n";
    for (const auto& [label, result] : experiments) {
        out << label << ',';
        if (result->mean_first_success_generation)
            out << g6(*result->mean_first_success_generation);
        else
            out << '-';
        out << ',';
        if (result->effort.i_star)
            out << *result->effort.i_star;
        else
            out << '-';
        out << ',';
        if (result->effort.effort)
            out << *result->effort.effort;
        else
            out << '-';
        out << ',' << result->successful_runs << ',';
        if (result->avfe_value)
            out << g6(*result->avfe_value);
        else
            out << '-';
        out << ',';
        if (result->quotient)
            out << g6(*result->quotient);
        else
            out << '-';
        out << '\n';
    }
}

std::vector<RunResult> read_runs_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open runs csv: " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "run,seed,success,first_success_gen,evaluations")
        throw std::runtime_error("unexpected runs csv header in " + path.string());
    std::vector<RunResult> results;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 5)
            throw std::runtime_error("malformed runs csv row: " + line);
        RunResult r;
        r.success = fields[2] == "1";
        if (fields[3] != "-")
            r.first_success_generation = std::stoi(fields[3]);
        r.evaluations = std::stoll(fields[4]);
        results.push_back(std::move(r));
    }
    return results;
}

std::vector<OracleRecord> load_oracle_cache(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open oracle cache: " + path.string());
    std::vector<OracleRecord> records;
    OracleRecord current;
    bool open = false;
    bool have_fmax = false, have_opt = false, have_witness = false;
    auto finish = [&]() {
        if (!open)
            return;
        if (!have_fmax || !have_opt || !have_witness)
            throw std::runtime_error("incomplete oracle cache record for '" + current.problem +
                                     "'");
        for (const auto& r : records)
            if (r.problem == current.problem)
                throw std::runtime_error("duplicate oracle cache record for '" +
                                         current.problem + "'");
        records.push_back(current);
        current = OracleRecord{};
        open = false;
        have_fmax = have_opt = have_witness = false;
    };
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("malformed oracle cache line: " + line);
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        if (key == "problem") {
            finish();
            if (!problem_id_from_string(value))
                throw std::runtime_error("oracle cache names unknown problem '" + value + "'");
            current.problem = value;
            open = true;
        } else if (!open) {
            throw std::runtime_error("oracle cache field before any problem line: " + line);
        } else if (key == "f_max") {
            current.f_max = value == "none" ? std::optional<double>{} : std::stod(value);
            have_fmax = true;
        } else if (key == "optimum_fitness") {
            current.optimum_fitness = std::stod(value);
            have_opt = true;
        } else if (key == "witness") {
            current.witness = value;
            have_witness = true;
        } else {
            throw std::runtime_error("unknown oracle cache key '" + key + "'");
        }
    }
    finish();
    return records;
}

void ensure_oracle(BenchmarkProblem& problem, const std::filesystem::path& cache_path,
                   int workers) {
    if (problem.oracle_ready())
        return;
    const std::string name = to_string(problem.id());
    if (std::filesystem::exists(cache_path)) {
        for (const OracleRecord& record : load_oracle_cache(cache_path)) {
            if (record.problem != name)
                continue;
            if (record.witness.size() != problem.length())
                throw std::runtime_error("oracle cache conflict: witness length for '" + name +
                                         "' does not match the problem");
            try {
                problem.set_oracle(record.f_max, record.optimum_fitness,
                                   BitString::from_string(record.witness));
            } catch (const std::exception& e) {
                throw std::runtime_error("oracle cache conflict for '" + name +
                                         "': " + e.what());
            }
            return;
        }
    }
    initialize_oracle(problem, workers);
    if (cache_path.has_parent_path())
        std::filesystem::create_directories(cache_path.parent_path());
    std::ofstream out(cache_path, std::ios::binary | std::ios::app);
    if (!out)
        throw std::runtime_error("cannot write oracle cache: " + cache_path.string());
    out << "problem=" << name << '\n';
    out << "f_max=";
    if (problem.shift_constant())
        out << g17(*problem.shift_constant());
    else
        out << "none";
    out << '\n';
    out << "optimum_fitness=" << g17(problem.optimum_fitness()) << '\n';
    out << "witness=" << problem.optimum_witness().to_string() << '\n';
    out << '\n';
}

void precompute_oracles(std::span<const ProblemId> ids,
                        const std::filesystem::path& cache_path, int workers) {
    for (const ProblemId id : ids) {
        BenchmarkProblem problem = BenchmarkProblem::standard(id);
        ensure_oracle(problem, cache_path, workers);
    }
}

} // namespace divga
