#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "divga/rng.hpp"

namespace divga {

/// Fixed-length binary chromosome. The length is set at construction and never
/// changes; unused high bits of the last word are kept zero so word-level
/// operations (hamming, crossover) need no masking.
class BitString {
public:
    explicit BitString(std::size_t length);

    static BitString random(std::size_t length, Rng& rng);
    static BitString from_string(std::string_view bits);

    std::size_t length() const noexcept { return length_; }

    bool bit(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set_bit(std::size_t i, bool value) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    BitString complement() const;

    std::size_t count_ones() const;

    std::string to_string() const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    friend bool operator==(const BitString&, const BitString&) = default;

    friend std::pair<BitString, BitString> one_point_crossover_at(const BitString& a,
                                                                  const BitString& b,
                                                                  std::size_t cut);

private:
    std::size_t length_;
    std::vector<std::uint64_t> words_;
};

/// Number of positions where a and b differ. Lengths must match.
std::size_t hamming(const BitString& a, const BitString& b);

/// hamming(a, b) / length, in [0, 1].
double normalized_difference(const BitString& a, const BitString& b);

/// Splices at a fixed interior cut point c in {1, ..., length-1}:
/// child1 = a[0..c) ++ b[c..l), child2 the mirror image.
std::pair<BitString, BitString> one_point_crossover_at(const BitString& a, const BitString& b,
                                                       std::size_t cut);

/// One-point crossover with the cut drawn uniformly from {1, ..., length-1}.
std::pair<BitString, BitString> one_point_crossover(const BitString& a, const BitString& b,
                                                    Rng& rng);

/// Copy of a with each bit independently flipped with probability p_m.
/// p_m = 0 draws nothing and returns an identical copy.
BitString mutate(const BitString& a, double p_m, Rng& rng);

} // namespace divga
