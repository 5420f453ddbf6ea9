#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "divga/harness.hpp"

namespace divga {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

long long parse_int(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(value, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("config key '" + key + "': '" + value + "' is not an integer");
    }
    if (pos != value.size())
        throw std::runtime_error("config key '" + key + "': '" + value + "' is not an integer");
    return v;
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("config key '" + key + "': '" + value + "' is not a number");
    }
    if (pos != value.size())
        throw std::runtime_error("config key '" + key + "': '" + value + "' is not a number");
    return v;
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_double(key, trim(item)));
    if (out.empty())
        throw std::runtime_error("config key '" + key + "': empty value");
    return out;
}

std::string pm_label(double p_m) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "pm_%g", p_m);
    return buf;
}

} // namespace

ExperimentSpec parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path.string());

    ExperimentSpec spec;
    bool tau_max_set = false;
    std::set<std::string> seen;

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#')
            continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected key = value");
        if (!seen.insert(key).second)
            throw std::runtime_error("duplicate config key '" + key + "'");

        if (key == "problem") {
            const auto id = problem_id_from_string(value);
            if (!id)
                throw std::runtime_error("unknown problem '" + value + "'");
            spec.problem = *id;
        } else if (key == "method") {
            if (value == "adaptive")
                spec.method = Method::adaptive;
            else if (value == "baseline")
                spec.method = Method::baseline;
            else
                throw std::runtime_error("method must be 'adaptive' or 'baseline', got '" +
                                         value + "'");
        } else if (key == "p_m") {
            spec.p_m_values = parse_double_list(key, value);
            for (const double p : spec.p_m_values)
                if (p < 0.0 || p > 1.0)
                    throw std::runtime_error("config key 'p_m': rate out of [0, 1]");
        } else if (key == "population_size") {
            const long long v = parse_int(key, value);
            if (v < 2 || v % 2 != 0)
                throw std::runtime_error(
                    "config key 'population_size': must be a positive even number");
            spec.ga.population_size = static_cast<int>(v);
        } else if (key == "max_generations") {
            const long long v = parse_int(key, value);
            if (v < 0)
                throw std::runtime_error("config key 'max_generations': must be non-negative");
            spec.ga.max_generations = static_cast<int>(v);
        } else if (key == "runs") {
            const long long v = parse_int(key, value);
            if (v < 1)
                throw std::runtime_error("config key 'runs': must be at least 1");
            spec.num_runs = static_cast<int>(v);
        } else if (key == "base_seed") {
            spec.base_seed = static_cast<std::uint64_t>(parse_int(key, value));
        } else if (key == "tau_max") {
            const long long v = parse_int(key, value);
            if (v < 1)
                throw std::runtime_error("config key 'tau_max': must be at least 1");
            spec.ga.mating.tau_max = static_cast<int>(v);
            tau_max_set = true;
        } else if (key == "num_preference_types") {
            const long long v = parse_int(key, value);
            if (v < 1)
                throw std::runtime_error(
                    "config key 'num_preference_types': must be at least 1");
            spec.ga.num_preference_types = static_cast<int>(v);
        } else if (key == "tournament_size") {
            const long long v = parse_int(key, value);
            if (v < 1)
                throw std::runtime_error("config key 'tournament_size': must be at least 1");
            spec.ga.mating.tournament_size = static_cast<int>(v);
        } else if (key == "p_c") {
            const double v = parse_double(key, value);
            if (v < 0.0 || v > 1.0)
                throw std::runtime_error("config key 'p_c': must lie in [0, 1]");
            spec.ga.p_c = v;
        } else if (key == "output_dir") {
            spec.output_dir = value;
        } else {
            throw std::runtime_error("unknown config key '" + key + "'");
        }
    }

    if (!tau_max_set)
        spec.ga.mating.tau_max = std::max(1, spec.ga.num_preference_types - 1);
    if (spec.ga.num_preference_types - 1 > spec.ga.mating.tau_max)
        throw std::runtime_error("config: num_preference_types exceeds tau_max + 1");
    return spec;
}

PlannedExperiment single_plan(const ExperimentSpec& spec) {
    GAConfig cfg = spec.ga;
    cfg.method = spec.method;
    if (spec.method == Method::adaptive) {
        cfg.p_m = 0.0;
        return {"adaptive", cfg};
    }
    if (spec.p_m_values.size() > 1)
        throw std::runtime_error("a single run takes one p_m value; use sweep for lists");
    cfg.p_m = spec.p_m_values.empty() ? 0.0 : spec.p_m_values.front();
    return {pm_label(cfg.p_m), cfg};
}

std::vector<PlannedExperiment> sweep_plan(const ExperimentSpec& spec) {
    std::vector<PlannedExperiment> plans;
    const std::vector<double> rates =
        spec.p_m_values.empty() ? std::vector<double>{0.0} : spec.p_m_values;
    for (const double p_m : rates) {
        GAConfig cfg = spec.ga;
        cfg.method = Method::baseline;
        cfg.p_m = p_m;
        plans.push_back({pm_label(p_m), cfg});
    }
    GAConfig adaptive = spec.ga;
    adaptive.method = Method::adaptive;
    adaptive.p_m = 0.0;
    plans.push_back({"adaptive", adaptive});
    return plans;
}

} // namespace divga
