#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "divga/problems.hpp"

using namespace divga;

namespace {

// Exhaustive reference for small instances: every decodable chromosome.
GridExtrema brute_force_extrema(const BenchmarkProblem& problem) {
    const std::size_t l = problem.length();
    REQUIRE(l <= 20);
    const std::uint64_t total = std::uint64_t{1} << l;
    BitString best_min(l), best_max(l);
    double min_v = 0, max_v = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        BitString bits(l);
        for (std::size_t j = 0; j < l; ++j)
            bits.set_bit(j, (code >> (l - 1 - j)) & 1u);
        const double v = problem.objective(bits);
        if (code == 0 || v < min_v) {
            min_v = v;
            best_min = bits;
        }
        if (code == 0 || v > max_v) {
            max_v = v;
            best_max = bits;
        }
    }
    return {min_v, max_v, best_min, best_max};
}

BitString all_zeros(std::size_t l) { return BitString(l); }

BitString all_ones(std::size_t l) { return BitString(l).complement(); }

} // namespace

TEST_CASE("decoding a sphere segment") {
    const DecodingSpec spec{1, 10, -5.12, 0.01};
    CHECK(decode(BitString::from_string("0000000000"), spec)[0] == -5.12);
    CHECK(decode(BitString::from_string("1111111111"), spec)[0] ==
          doctest::Approx(5.11).epsilon(1e-12));
    CHECK(decode(BitString::from_string("1000000000"), spec)[0] == 0.0);
    CHECK_THROWS_AS(decode(BitString::from_string("000"), spec), std::invalid_argument);
}

TEST_CASE("decode and encode are inverse on grid points") {
    const DecodingSpec spec{3, 10, -5.12, 0.01};
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const BitString bits = BitString::random(30, rng);
        const auto x = decode(bits, spec);
        std::vector<std::uint64_t> u;
        for (const double v : x)
            u.push_back(static_cast<std::uint64_t>(std::llround((v - spec.lo) / spec.step)));
        CHECK(encode_grid_point(spec, u) == bits);
    }
}

TEST_CASE("one_max objective counts ones") {
    const auto problem = BenchmarkProblem::standard(ProblemId::one_max);
    CHECK(problem.objective(all_ones(45)) == 45.0);
    CHECK(problem.objective(all_zeros(45)) == 0.0);
    CHECK_THROWS_AS(problem.objective(all_ones(44)), std::invalid_argument);
}

TEST_CASE("deceptive block scores") {
    const auto tiny = BenchmarkProblem::custom(ProblemId::deceptive, 3, std::nullopt);
    const double g0 = tiny.objective(BitString::from_string("000"));
    const double g1 = tiny.objective(BitString::from_string("100"));
    const double g2 = tiny.objective(BitString::from_string("110"));
    const double g3 = tiny.objective(BitString::from_string("111"));
    CHECK(g0 == 0.9);
    CHECK(g1 == 0.8);
    CHECK(g2 == 0.0);
    CHECK(g3 == 1.0);
    // misleading gradient: score falls as ones accumulate, except at the optimum
    CHECK(g0 > g1);
    CHECK(g1 > g2);
    CHECK(g3 > g0);

    const auto problem = BenchmarkProblem::standard(ProblemId::deceptive);
    CHECK(problem.objective(all_ones(45)) == 15.0);
    CHECK(problem.objective(all_zeros(45)) == doctest::Approx(13.5));
    BitString one_block = all_zeros(45);
    one_block.set_bit(0, true);
    one_block.set_bit(1, true);
    one_block.set_bit(2, true);
    CHECK(problem.objective(one_block) == doctest::Approx(14 * 0.9 + 1.0));
}

TEST_CASE("decoded objectives at reference points") {
    const auto sphere = BenchmarkProblem::standard(ProblemId::sphere);
    CHECK(sphere.objective(all_zeros(30)) == doctest::Approx(78.6432)); // (-5.12, -5.12, -5.12)

    const std::uint64_t origin3[3] = {512, 512, 512};
    const auto rastrigin = BenchmarkProblem::standard(ProblemId::rastrigin);
    CHECK(rastrigin.objective(encode_grid_point(*rastrigin.decoding(), origin3)) == 0.0);

    const auto griewangk = BenchmarkProblem::standard(ProblemId::griewangk);
    CHECK(griewangk.objective(encode_grid_point(*griewangk.decoding(), origin3)) == 0.0);

    const auto step = BenchmarkProblem::standard(ProblemId::step);
    CHECK(step.objective(all_zeros(50)) == -30.0); // floor(-5.12) * 5
}

TEST_CASE("shift constants for the separable minimization problems") {
    const auto sphere = BenchmarkProblem::standard(ProblemId::sphere);
    CHECK(compute_shift_constant(sphere) == doctest::Approx(78.6432));
    const auto step = BenchmarkProblem::standard(ProblemId::step);
    CHECK(compute_shift_constant(step) == 25.0);
    const auto rastrigin = BenchmarkProblem::standard(ProblemId::rastrigin);
    CHECK(compute_shift_constant(rastrigin) == doctest::Approx(121.05464103943434));
    const auto one_max = BenchmarkProblem::standard(ProblemId::one_max);
    CHECK_THROWS_AS(compute_shift_constant(one_max), std::invalid_argument);
}

TEST_CASE("shifted fitness is the shift minus the objective") {
    auto step = BenchmarkProblem::standard(ProblemId::step);
    CHECK_THROWS_AS(step.fitness(all_zeros(50)), std::runtime_error);
    initialize_oracle(step);
    CHECK(step.fitness(all_zeros(50)) == 55.0); // 25 - (-30)
    CHECK(step.optimum_fitness() == 55.0);

    auto one_max = BenchmarkProblem::standard(ProblemId::one_max);
    CHECK(one_max.fitness(all_ones(45)) == 45.0);

    auto sphere = BenchmarkProblem::standard(ProblemId::sphere);
    initialize_oracle(sphere);
    const std::uint64_t origin3[3] = {512, 512, 512};
    CHECK(sphere.fitness(encode_grid_point(*sphere.decoding(), origin3)) ==
          doctest::Approx(78.6432));
}

TEST_CASE("grid optima of the bit-counting problems") {
    auto one_max = BenchmarkProblem::standard(ProblemId::one_max);
    const auto [opt1, witness1] = grid_optimum(one_max);
    CHECK(opt1 == 45.0);
    CHECK(witness1 == all_ones(45));

    auto deceptive = BenchmarkProblem::standard(ProblemId::deceptive);
    const auto [opt2, witness2] = grid_optimum(deceptive);
    CHECK(opt2 == 15.0);
    CHECK(witness2 == all_ones(45));
}

TEST_CASE("rastrigin grid optimum sits at the decoded origin") {
    auto problem = BenchmarkProblem::standard(ProblemId::rastrigin);
    initialize_oracle(problem);
    CHECK(problem.optimum_fitness() == doctest::Approx(121.05464103943434));
    const auto x = decode(problem.optimum_witness(), *problem.decoding());
    for (const double xi : x)
        CHECK(xi == 0.0);
}

TEST_CASE("separable oracle equals brute force on reduced instances") {
    for (const ProblemId id : {ProblemId::sphere, ProblemId::step}) {
        const auto reduced = BenchmarkProblem::custom(id, 8, DecodingSpec{2, 4, -5.12, 0.01});
        const GridExtrema scanned = scan_grid_extrema(reduced);
        const GridExtrema brute = brute_force_extrema(reduced);
        CHECK(scanned.min_objective == brute.min_objective);
        CHECK(scanned.max_objective == brute.max_objective);
    }
}

TEST_CASE("single-variable scan equals brute force on a reduced multimodal instance") {
    const auto reduced = BenchmarkProblem::custom(
        ProblemId::multimodal, 16, DecodingSpec{1, 16, 0.0, 1.0 / 65535.0});
    const GridExtrema scanned = scan_grid_extrema(reduced);
    const GridExtrema brute = brute_force_extrema(reduced);
    CHECK(scanned.min_objective == brute.min_objective);
    CHECK(scanned.max_objective == brute.max_objective);
}

TEST_CASE("multimodal coarse-plus-refined optimum") {
    auto problem = BenchmarkProblem::standard(ProblemId::multimodal);
    initialize_oracle(problem);
    CHECK(problem.optimum_fitness() == doctest::Approx(0.99999982845447233).epsilon(1e-12));
    CHECK(problem.optimum_fitness() > 0.999);
    CHECK(problem.objective(problem.optimum_witness()) == problem.optimum_fitness());
    const double x = decode(problem.optimum_witness(), *problem.decoding())[0];
    CHECK(x == doctest::Approx(0.0797).epsilon(1e-2));
}

TEST_CASE("success predicate near the optimum") {
    auto one_max = BenchmarkProblem::standard(ProblemId::one_max);
    initialize_oracle(one_max);
    CHECK(one_max.is_success(45.0));
    CHECK_FALSE(one_max.is_success(44.0));
    CHECK(one_max.is_success(one_max.optimum_fitness()));

    auto deceptive = BenchmarkProblem::standard(ProblemId::deceptive);
    initialize_oracle(deceptive);
    CHECK_FALSE(deceptive.is_success(14.9));
    CHECK_FALSE(deceptive.is_success(13.6));
    CHECK(deceptive.is_success(15.0));
}

TEST_CASE("fitness stays non-negative on random chromosomes") {
    Rng rng(71);
    for (const ProblemId id :
         {ProblemId::one_max, ProblemId::deceptive, ProblemId::sphere, ProblemId::step,
          ProblemId::rastrigin, ProblemId::schwefel}) {
        auto problem = BenchmarkProblem::standard(id);
        initialize_oracle(problem);
        for (int i = 0; i < 2000; ++i) {
            const BitString bits = BitString::random(problem.length(), rng);
            CHECK(problem.fitness(bits) >= 0.0);
        }
    }
}

TEST_CASE("oracle values can only be installed once") {
    auto problem = BenchmarkProblem::standard(ProblemId::one_max);
    problem.set_oracle(std::nullopt, 45.0, all_ones(45));
    CHECK_NOTHROW(problem.set_oracle(std::nullopt, 45.0, all_ones(45)));
    CHECK_THROWS_AS(problem.set_oracle(std::nullopt, 44.0, all_ones(45)), std::runtime_error);

    auto sphere = BenchmarkProblem::standard(ProblemId::sphere);
    // witness that does not attain the claimed optimum
    CHECK_THROWS_AS(sphere.set_oracle(78.6432, 78.6432, all_zeros(30)), std::runtime_error);
}

TEST_CASE("custom instance validation") {
    CHECK_THROWS_AS(BenchmarkProblem::custom(ProblemId::one_max, 45, DecodingSpec{3, 15, 0, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(BenchmarkProblem::custom(ProblemId::sphere, 30, std::nullopt),
                    std::invalid_argument);
    CHECK_THROWS_AS(BenchmarkProblem::custom(ProblemId::deceptive, 44, std::nullopt),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        BenchmarkProblem::custom(ProblemId::sphere, 20, DecodingSpec{3, 10, -5.12, 0.01}),
        std::invalid_argument);
}
