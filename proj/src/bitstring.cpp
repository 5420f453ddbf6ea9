#include "divga/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace divga {

namespace {

std::size_t word_count(std::size_t length) { return (length + 63) / 64; }

std::uint64_t tail_mask(std::size_t length) {
    const std::size_t rem = length & 63;
    return rem == 0 ? ~std::uint64_t{0} : (~std::uint64_t{0} >> (64 - rem));
}

void require_same_length(const BitString& a, const BitString& b) {
    if (a.length() != b.length())
        throw std::invalid_argument("bitstring length mismatch: " + std::to_string(a.length()) +
                                    " vs " + std::to_string(b.length()));
}

} // namespace

BitString::BitString(std::size_t length) : length_(length), words_(word_count(length), 0) {
    if (length < 2)
        throw std::invalid_argument("bitstring length must be at least 2");
}

BitString BitString::random(std::size_t length, Rng& rng) {
    BitString s(length);
    for (auto& w : s.words_)
        w = rng();
    s.words_.back() &= tail_mask(length);
    return s;
}

BitString BitString::from_string(std::string_view bits) {
    BitString s(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            s.set_bit(i, true);
        else if (bits[i] != '0')
            throw std::invalid_argument("bitstring literal may contain only '0' and '1'");
    }
    return s;
}

BitString BitString::complement() const {
    BitString s(length_);
    for (std::size_t w = 0; w < words_.size(); ++w)
        s.words_[w] = ~words_[w];
    s.words_.back() &= tail_mask(length_);
    return s;
}

std::size_t BitString::count_ones() const {
    std::size_t n = 0;
    for (const auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::string BitString::to_string() const {
    std::string out(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (bit(i))
            out[i] = '1';
    return out;
}

std::size_t hamming(const BitString& a, const BitString& b) {
    require_same_length(a, b);
    std::size_t n = 0;
    const auto wa = a.words();
    const auto wb = b.words();
    for (std::size_t w = 0; w < wa.size(); ++w)
        n += static_cast<std::size_t>(std::popcount(wa[w] ^ wb[w]));
    return n;
}

double normalized_difference(const BitString& a, const BitString& b) {
    return static_cast<double>(hamming(a, b)) / static_cast<double>(a.length());
}

std::pair<BitString, BitString> one_point_crossover_at(const BitString& a, const BitString& b,
                                                       std::size_t cut) {
    require_same_length(a, b);
    if (cut < 1 || cut >= a.length())
        throw std::invalid_argument("crossover cut point must be interior");
    BitString c1 = a;
    BitString c2 = b;
    // Exchange the suffix [cut, l): whole words above the boundary word, then
    // the high bits of the boundary word itself.
    const std::size_t boundary = cut >> 6;
    const std::size_t offset = cut & 63;
    std::size_t first_full = boundary + (offset != 0 ? 1 : 0);
    for (std::size_t w = first_full; w < c1.words_.size(); ++w)
        std::swap(c1.words_[w], c2.words_[w]);
    if (offset != 0) {
        const std::uint64_t high = ~std::uint64_t{0} << offset;
        const std::uint64_t wa = c1.words_[boundary];
        const std::uint64_t wb = c2.words_[boundary];
        c1.words_[boundary] = (wa & ~high) | (wb & high);
        c2.words_[boundary] = (wb & ~high) | (wa & high);
    }
    return {std::move(c1), std::move(c2)};
}

std::pair<BitString, BitString> one_point_crossover(const BitString& a, const BitString& b,
                                                    Rng& rng) {
    require_same_length(a, b);
    const std::size_t cut = 1 + uniform_index(rng, a.length() - 1);
    return one_point_crossover_at(a, b, cut);
}

BitString mutate(const BitString& a, double p_m, Rng& rng) {
    if (p_m < 0.0 || p_m > 1.0)
        throw std::invalid_argument("mutation rate must lie in [0, 1]");
    BitString s = a;
    if (p_m == 0.0)
        return s;
    for (std::size_t i = 0; i < s.length(); ++i)
        if (uniform01(rng) < p_m)
            s.set_bit(i, !s.bit(i));
    return s;
}

} // namespace divga
