#include "divga/problems.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace divga {

namespace {

constexpr std::array<ProblemId, 9> kAllProblems = {
    ProblemId::one_max,  ProblemId::deceptive, ProblemId::multimodal,
    ProblemId::sphere,   ProblemId::step,      ProblemId::shaffer_f6,
    ProblemId::rastrigin, ProblemId::schwefel, ProblemId::griewangk,
};

// Block score of the deceptive function, indexed by the number of ones in a
// 3-bit block. Misleading everywhere except at the all-ones optimum.
constexpr std::array<double, 4> kDeceptiveBlock = {0.9, 0.8, 0.0, 1.0};

double multimodal_value(double x) {
    const double envelope = std::exp(-2.0 * std::numbers::ln2 * ((x - 0.08) / 0.854) *
                                     ((x - 0.08) / 0.854));
    const double s = std::sin(5.0 * std::numbers::pi * (std::pow(x, 0.75) - 0.05));
    const double s2 = s * s;
    return envelope * s2 * s2 * s2;
}

double shaffer_f6_value(double x1, double x2) {
    const double r2 = x1 * x1 + x2 * x2;
    const double s = std::sin(std::sqrt(r2));
    const double denom = 1.0 + 0.001 * r2;
    return 0.5 + (s * s - 0.5) / (denom * denom);
}

} // namespace

std::string to_string(ProblemId id) {
    switch (id) {
    case ProblemId::one_max: return "one_max";
    case ProblemId::deceptive: return "deceptive";
    case ProblemId::multimodal: return "multimodal";
    case ProblemId::sphere: return "sphere";
    case ProblemId::step: return "step";
    case ProblemId::shaffer_f6: return "shaffer_f6";
    case ProblemId::rastrigin: return "rastrigin";
    case ProblemId::schwefel: return "schwefel";
    case ProblemId::griewangk: return "griewangk";
    }
    throw std::logic_error("unknown problem id");
}

std::optional<ProblemId> problem_id_from_string(std::string_view name) {
    for (const auto id : kAllProblems)
        if (to_string(id) == name)
            return id;
    return std::nullopt;
}

std::span<const ProblemId> all_problem_ids() { return kAllProblems; }

std::vector<double> decode(const BitString& bits, const DecodingSpec& spec) {
    if (bits.length() != spec.chromosome_length())
        throw std::invalid_argument("chromosome length does not match decoding spec");
    std::vector<double> values(static_cast<std::size_t>(spec.n_vars));
    const auto b = static_cast<std::size_t>(spec.bits_per_var);
    for (std::size_t k = 0; k < values.size(); ++k) {
        std::uint64_t u = 0;
        for (std::size_t j = 0; j < b; ++j)
            u = (u << 1) | static_cast<std::uint64_t>(bits.bit(k * b + j));
        values[k] = spec.value(u);
    }
    return values;
}

BitString encode_grid_point(const DecodingSpec& spec, std::span<const std::uint64_t> u) {
    if (u.size() != static_cast<std::size_t>(spec.n_vars))
        throw std::invalid_argument("grid point dimension does not match decoding spec");
    BitString bits(spec.chromosome_length());
    const auto b = static_cast<std::size_t>(spec.bits_per_var);
    for (std::size_t k = 0; k < u.size(); ++k)
        for (std::size_t j = 0; j < b; ++j)
            bits.set_bit(k * b + j, (u[k] >> (b - 1 - j)) & 1u);
    return bits;
}

BenchmarkProblem::BenchmarkProblem(ProblemId id, std::size_t length,
                                   std::optional<DecodingSpec> decoding, bool minimize)
    : id_(id), length_(length), decoding_(std::move(decoding)), minimize_(minimize) {}

BenchmarkProblem BenchmarkProblem::standard(ProblemId id) {
    switch (id) {
    case ProblemId::one_max:
        return custom(id, 45, std::nullopt);
    case ProblemId::deceptive:
        return custom(id, 45, std::nullopt);
    case ProblemId::multimodal:
        return custom(id, 30, DecodingSpec{1, 30, 0.0, 1.0 / (static_cast<double>(1u << 30) - 1.0)});
    case ProblemId::sphere:
        return custom(id, 30, DecodingSpec{3, 10, -5.12, 0.01});
    case ProblemId::step:
        return custom(id, 50, DecodingSpec{5, 10, -5.12, 0.01});
    case ProblemId::shaffer_f6:
        return custom(id, 22, DecodingSpec{2, 11, -102.4, 0.1});
    case ProblemId::rastrigin:
        return custom(id, 30, DecodingSpec{3, 10, -5.12, 0.01});
    case ProblemId::schwefel:
        return custom(id, 30, DecodingSpec{3, 10, -512.0, 1.0});
    case ProblemId::griewangk:
        return custom(id, 30, DecodingSpec{3, 10, -512.0, 1.0});
    }
    throw std::logic_error("unknown problem id");
}

BenchmarkProblem BenchmarkProblem::custom(ProblemId id, std::size_t length,
                                          std::optional<DecodingSpec> decoding) {
    const bool bit_problem = (id == ProblemId::one_max || id == ProblemId::deceptive);
    if (bit_problem && decoding.has_value())
        throw std::invalid_argument("bit-counting problems take no decoding spec");
    if (!bit_problem && !decoding.has_value())
        throw std::invalid_argument("decoded problems require a decoding spec");
    if (decoding && decoding->chromosome_length() != length)
        throw std::invalid_argument("decoding spec does not cover the chromosome length");
    if (id == ProblemId::deceptive && length % 3 != 0)
        throw std::invalid_argument("deceptive length must be a multiple of 3");
    if (id == ProblemId::multimodal && decoding && decoding->n_vars != 1)
        throw std::invalid_argument("multimodal is a single-variable problem");
    if (id == ProblemId::shaffer_f6 && decoding && decoding->n_vars != 2)
        throw std::invalid_argument("shaffer_f6 is a two-variable problem");
    const bool minimize = (id == ProblemId::sphere || id == ProblemId::step ||
                           id == ProblemId::shaffer_f6 || id == ProblemId::rastrigin ||
                           id == ProblemId::schwefel || id == ProblemId::griewangk);
    return BenchmarkProblem(id, length, std::move(decoding), minimize);
}

double BenchmarkProblem::objective(const BitString& bits) const {
    if (bits.length() != length_)
        throw std::invalid_argument("chromosome length does not match problem");
    switch (id_) {
    case ProblemId::one_max:
        return static_cast<double>(bits.count_ones());
    case ProblemId::deceptive: {
        double sum = 0.0;
        for (std::size_t block = 0; block < length_ / 3; ++block) {
            const int ones = bits.bit(3 * block) + bits.bit(3 * block + 1) + bits.bit(3 * block + 2);
            sum += kDeceptiveBlock[static_cast<std::size_t>(ones)];
        }
        return sum;
    }
    case ProblemId::multimodal:
        return multimodal_value(decode(bits, *decoding_)[0]);
    case ProblemId::sphere: {
        double sum = 0.0;
        for (const double x : decode(bits, *decoding_))
            sum += x * x;
        return sum;
    }
    case ProblemId::step: {
        double sum = 0.0;
        for (const double x : decode(bits, *decoding_))
            sum += std::floor(x);
        return sum;
    }
    case ProblemId::shaffer_f6: {
        const auto x = decode(bits, *decoding_);
        return shaffer_f6_value(x[0], x[1]);
    }
    case ProblemId::rastrigin: {
        const auto x = decode(bits, *decoding_);
        double sum = 10.0 * static_cast<double>(x.size());
        for (const double xi : x)
            sum += xi * xi - 10.0 * std::cos(2.0 * std::numbers::pi * xi);
        return sum;
    }
    case ProblemId::schwefel: {
        double sum = 0.0;
        for (const double x : decode(bits, *decoding_))
            sum += -x * std::sin(std::sqrt(std::abs(x)));
        return sum;
    }
    case ProblemId::griewangk: {
        const auto x = decode(bits, *decoding_);
        double sum = 0.0;
        double prod = 1.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            sum += x[i] * x[i] / 4000.0;
            prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
        }
        return sum - prod + 1.0;
    }
    }
    throw std::logic_error("unknown problem id");
}

double BenchmarkProblem::fitness(const BitString& bits) const {
    if (!minimize_)
        return objective(bits);
    if (!shift_.has_value())
        throw std::runtime_error("shift constant not initialized for " + to_string(id_));
    return *shift_ - objective(bits);
}

bool BenchmarkProblem::is_success(double fitness_value) const {
    require_oracle();
    const double opt = *optimum_fitness_;
    return fitness_value >= opt - 1e-9 * std::max(1.0, std::abs(opt));
}

void BenchmarkProblem::require_oracle() const {
    if (!oracle_ready())
        throw std::runtime_error("grid oracle not initialized for " + to_string(id_));
}

double BenchmarkProblem::optimum_fitness() const {
    require_oracle();
    return *optimum_fitness_;
}

const BitString& BenchmarkProblem::optimum_witness() const {
    require_oracle();
    return *witness_;
}

void BenchmarkProblem::set_oracle(std::optional<double> shift, double optimum_fitness,
                                  BitString witness) {
    if (minimize_ && !shift.has_value())
        throw std::invalid_argument("minimization problems require a shift constant");
    if (!minimize_ && shift.has_value())
        throw std::invalid_argument("maximization problems take no shift constant");
    if (witness.length() != length_)
        throw std::invalid_argument("oracle witness length does not match problem");
    if (oracle_ready()) {
        const bool same = shift == shift_ && optimum_fitness == *optimum_fitness_ &&
                          witness == *witness_;
        if (!same)
            throw std::runtime_error("conflicting oracle values for " + to_string(id_));
        return;
    }
    shift_ = shift;
    // Cross-check before accepting: the witness must actually attain the
    // claimed optimum under the claimed shift.
    const double attained = fitness(witness);
    if (std::abs(attained - optimum_fitness) >
        1e-9 * std::max(1.0, std::abs(optimum_fitness))) {
        shift_ = std::nullopt;
        throw std::runtime_error("oracle witness does not attain the claimed optimum for " +
                                 to_string(id_));
    }
    optimum_fitness_ = optimum_fitness;
    witness_ = std::move(witness);
}

double compute_shift_constant(const BenchmarkProblem& problem, int workers) {
    if (!problem.is_minimization())
        throw std::invalid_argument("shift constant is defined for minimization problems only");
    return scan_grid_extrema(problem, workers).max_objective;
}

std::pair<double, BitString> grid_optimum(const BenchmarkProblem& problem, int workers) {
    const GridExtrema extrema = scan_grid_extrema(problem, workers);
    if (!problem.is_minimization())
        return {extrema.max_objective, extrema.argmax};
    if (!problem.shift_constant().has_value())
        throw std::runtime_error("shift constant not initialized for " + to_string(problem.id()));
    return {*problem.shift_constant() - extrema.min_objective, extrema.argmin};
}

void initialize_oracle(BenchmarkProblem& problem, int workers) {
    if (problem.oracle_ready())
        return;
    const GridExtrema extrema = scan_grid_extrema(problem, workers);
    if (problem.is_minimization())
        problem.set_oracle(extrema.max_objective, extrema.max_objective - extrema.min_objective,
                           extrema.argmin);
    else
        problem.set_oracle(std::nullopt, extrema.max_objective, extrema.argmax);
}

} // namespace divga
