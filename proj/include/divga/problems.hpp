#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "divga/bitstring.hpp"

namespace divga {

enum class ProblemId {
    one_max,
    deceptive,
    multimodal,
    sphere,
    step,
    shaffer_f6,
    rastrigin,
    schwefel,
    griewangk,
};

std::string to_string(ProblemId id);
std::optional<ProblemId> problem_id_from_string(std::string_view name);
std::span<const ProblemId> all_problem_ids();

/// Uniform-grid binary decoding. Each variable occupies bits_per_var
/// consecutive bits, most significant bit first; the unsigned integer u maps
/// to lo + step * u.
struct DecodingSpec {
    int n_vars = 1;
    int bits_per_var = 1;
    double lo = 0.0;
    double step = 1.0;

    std::size_t chromosome_length() const {
        return static_cast<std::size_t>(n_vars) * static_cast<std::size_t>(bits_per_var);
    }
    double value(std::uint64_t u) const { return lo + step * static_cast<double>(u); }
};

std::vector<double> decode(const BitString& bits, const DecodingSpec& spec);

/// Inverse of decode for grid indices: builds the chromosome whose k-th
/// variable has grid index u[k].
BitString encode_grid_point(const DecodingSpec& spec, std::span<const std::uint64_t> u);

/// One benchmark function instance: objective, decoding, and (once the grid
/// oracle has run) the shift constant used to turn minimization into
/// non-negative maximization plus the grid optimum defining run success.
class BenchmarkProblem {
public:
    /// The standard instance of a problem (lengths, ranges and grid steps of
    /// the experiment suite).
    static BenchmarkProblem standard(ProblemId id);

    /// Reduced or otherwise non-standard instance; used mainly by tests.
    /// `decoding` must be absent for the two direct bit-counting problems and
    /// present for the rest.
    static BenchmarkProblem custom(ProblemId id, std::size_t length,
                                   std::optional<DecodingSpec> decoding);

    ProblemId id() const noexcept { return id_; }
    std::size_t length() const noexcept { return length_; }
    bool is_minimization() const noexcept { return minimize_; }
    const std::optional<DecodingSpec>& decoding() const noexcept { return decoding_; }

    /// The benchmark function value of a chromosome (before any shift).
    double objective(const BitString& bits) const;

    /// Shifted fitness: the objective itself for maximization problems,
    /// shift_constant - objective for minimization problems. Non-negative on
    /// every decodable chromosome.
    double fitness(const BitString& bits) const;

    /// True iff f reaches the grid optimum up to a 1e-9 relative tolerance.
    bool is_success(double fitness_value) const;

    bool oracle_ready() const noexcept { return optimum_fitness_.has_value(); }
    void require_oracle() const;

    /// Maximum objective over the grid; present only for minimization
    /// problems with an initialized oracle.
    std::optional<double> shift_constant() const noexcept { return shift_; }
    double optimum_fitness() const;
    const BitString& optimum_witness() const;

    /// Installs oracle results. Re-installing identical values is a no-op;
    /// conflicting values are a hard error.
    void set_oracle(std::optional<double> shift, double optimum_fitness, BitString witness);

private:
    BenchmarkProblem(ProblemId id, std::size_t length, std::optional<DecodingSpec> decoding,
                     bool minimize);

    ProblemId id_;
    std::size_t length_;
    std::optional<DecodingSpec> decoding_;
    bool minimize_;
    std::optional<double> shift_;
    std::optional<double> optimum_fitness_;
    std::optional<BitString> witness_;
};

/// Exact objective extrema over all decodable chromosomes, with one witness
/// chromosome each (smallest grid index on ties).
struct GridExtrema {
    double min_objective;
    double max_objective;
    BitString argmin;
    BitString argmax;
};

/// Enumerates the decodable grid. Segment-separable problems use per-segment
/// enumeration, shaffer_f6 and griewangk scan the full grid (griewangk in
/// parallel), and the single-variable multimodal problem uses a coarse scan
/// refined around the best coarse index. workers <= 0 means host parallelism.
GridExtrema scan_grid_extrema(const BenchmarkProblem& problem, int workers = 0);

/// Maximum objective over the grid (minimization problems only).
double compute_shift_constant(const BenchmarkProblem& problem, int workers = 0);

/// Maximum shifted fitness over the grid and one attaining chromosome. For
/// minimization problems the shift constant must already be installed.
std::pair<double, BitString> grid_optimum(const BenchmarkProblem& problem, int workers = 0);

/// One enumeration pass installing shift constant (if applicable) and grid
/// optimum on the problem.
void initialize_oracle(BenchmarkProblem& problem, int workers = 0);

} // namespace divga
