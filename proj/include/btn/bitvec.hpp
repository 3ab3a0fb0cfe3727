#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "btn/bigint.hpp"
#include "btn/errors.hpp"
#include "btn/rng.hpp"

namespace btn {

/// Fixed-width vector over {0,1}. The width is set at construction and the
/// value never changes afterwards.
class bit_vector {
public:
    bit_vector() = default;

    explicit bit_vector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_)
            if (b > 1) throw input_error("bit_vector entries must be 0 or 1");
    }

    static bit_vector zeros(std::size_t n) {
        return bit_vector(std::vector<std::uint8_t>(n, 0));
    }

    static bit_vector ones(std::size_t n) {
        return bit_vector(std::vector<std::uint8_t>(n, 1));
    }

    // Parses "0101"-style strings.
    static bit_vector from_string(std::string_view s) {
        std::vector<std::uint8_t> bits;
        bits.reserve(s.size());
        for (char c : s) {
            if (c == '0')
                bits.push_back(0);
            else if (c == '1')
                bits.push_back(1);
            else
                throw parse_error(std::string("invalid bit character '") + c + "'");
        }
        return bit_vector(std::move(bits));
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

    std::size_t count_ones() const {
        return static_cast<std::size_t>(
            std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
    }

    std::string to_string() const {
        std::string s;
        s.reserve(bits_.size());
        for (auto b : bits_) s.push_back(b ? '1' : '0');
        return s;
    }

    const std::vector<std::uint8_t>& raw() const { return bits_; }

    auto operator<=>(const bit_vector&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Smallest m with 2^m >= n (n >= 1). ceil_log2(1) == 0.
inline std::size_t ceil_log2(std::size_t n) {
    std::size_t m = 0;
    std::size_t pow = 1;
    while (pow < n) {
        pow *= 2;
        ++m;
    }
    return m;
}

/// Code width used when indexing n objects in binary; a zero-width layer is
/// never produced, so n = 1 still gets one bit.
inline std::size_t index_code_width(std::size_t n) {
    return std::max<std::size_t>(1, ceil_log2(n));
}

/// The `width`-bit binary representation of `value`, most significant bit
/// first: binary_code(5, 3) == (1,0,1).
inline bit_vector binary_code(std::uint64_t value, std::size_t width) {
    if (width < 64 && value >= (std::uint64_t{1} << width))
        throw range_error("value does not fit in the requested code width");
    std::vector<std::uint8_t> bits(width, 0);
    for (std::size_t h = 0; h < width; ++h)
        bits[width - 1 - h] = static_cast<std::uint8_t>((value >> h) & 1u);
    return bit_vector(std::move(bits));
}

/// Same bits in ascending-significance order: bit h of the result is bit h
/// of `value`. Used where gate h carries weight 2^h.
inline bit_vector binary_code_lsb(std::uint64_t value, std::size_t width) {
    if (width < 64 && value >= (std::uint64_t{1} << width))
        throw range_error("value does not fit in the requested code width");
    std::vector<std::uint8_t> bits(width, 0);
    for (std::size_t h = 0; h < width; ++h)
        bits[h] = static_cast<std::uint8_t>((value >> h) & 1u);
    return bit_vector(std::move(bits));
}

/// Integer value of an ascending-significance code (inverse of
/// binary_code_lsb).
inline std::uint64_t code_value_lsb(const bit_vector& code) {
    std::uint64_t v = 0;
    for (std::size_t h = 0; h < code.size(); ++h)
        if (code[h]) v |= std::uint64_t{1} << h;
    return v;
}

/// Integer value of a most-significant-bit-first code.
inline std::uint64_t code_value(const bit_vector& code) {
    std::uint64_t v = 0;
    for (std::size_t h = 0; h < code.size(); ++h) v = (v << 1) | code[h];
    return v;
}

/// A set of n pairwise-distinct D-dimensional bit vectors.
struct dataset {
    std::size_t dim = 0;
    std::vector<bit_vector> vectors;

    std::size_t size() const { return vectors.size(); }

    static dataset of(std::vector<bit_vector> vecs) {
        if (vecs.empty()) throw input_error("dataset needs at least one vector");
        const std::size_t dim = vecs[0].size();
        if (dim == 0) throw input_error("dataset vectors must have dimension >= 1");
        for (const auto& v : vecs)
            if (v.size() != dim)
                throw dimension_error("dataset vectors must share one dimension");
        std::set<bit_vector> seen;
        for (std::size_t i = 0; i < vecs.size(); ++i)
            if (!seen.insert(vecs[i]).second)
                throw input_error("dataset vectors must be pairwise distinct (row " +
                                  std::to_string(i) + " repeats)");
        return dataset{dim, std::move(vecs)};
    }
};

namespace detail {

inline void check_capacity(std::size_t n, std::size_t dim) {
    if (bigint(n) > (bigint(1) << dim))
        throw infeasible_error("cannot place " + std::to_string(n) +
                               " distinct vectors in dimension " +
                               std::to_string(dim));
}

}  // namespace detail

/// n distinct vectors with i.i.d. fair bits, by rejection sampling.
inline dataset random_dataset(std::size_t n, std::size_t dim, std::uint64_t seed) {
    if (n == 0 || dim == 0) throw input_error("need n >= 1 and dim >= 1");
    detail::check_capacity(n, dim);
    rng_engine g = seeded_engine(seed);
    std::set<bit_vector> seen;
    std::vector<bit_vector> vecs;
    const std::size_t max_draws = 10000 * n + 10000;
    std::size_t draws = 0;
    while (vecs.size() < n) {
        if (++draws > max_draws)
            throw search_exhausted("random dataset generation stalled");
        std::vector<std::uint8_t> bits(dim);
        for (auto& b : bits) b = rand_bit(g);
        bit_vector v(std::move(bits));
        if (seen.insert(v).second) vecs.push_back(std::move(v));
    }
    return dataset{dim, std::move(vecs)};
}

/// n distinct vectors with exactly `ones` ones each (random supports).
inline dataset random_dataset_with_ones(std::size_t n, std::size_t dim,
                                        std::size_t ones, std::uint64_t seed) {
    if (n == 0 || dim == 0) throw input_error("need n >= 1 and dim >= 1");
    if (ones > dim) throw input_error("ones-count target exceeds dimension");
    if (bigint(n) > binomial(static_cast<unsigned>(dim), static_cast<unsigned>(ones)))
        throw infeasible_error("not enough distinct vectors with that ones count");
    rng_engine g = seeded_engine(seed);
    std::set<bit_vector> seen;
    std::vector<bit_vector> vecs;
    std::vector<std::size_t> idx(dim);
    const std::size_t max_draws = 10000 * n + 10000;
    std::size_t draws = 0;
    while (vecs.size() < n) {
        if (++draws > max_draws)
            throw search_exhausted("random dataset generation stalled");
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        // Partial Fisher-Yates: the first `ones` entries form a random subset.
        for (std::size_t i = 0; i < ones; ++i) {
            std::size_t j = i + rand_below(g, dim - i);
            std::swap(idx[i], idx[j]);
        }
        std::vector<std::uint8_t> bits(dim, 0);
        for (std::size_t i = 0; i < ones; ++i) bits[idx[i]] = 1;
        bit_vector v(std::move(bits));
        if (seen.insert(v).second) vecs.push_back(std::move(v));
    }
    return dataset{dim, std::move(vecs)};
}

}  // namespace btn
