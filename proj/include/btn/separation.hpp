#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "btn/bigint.hpp"
#include "btn/bitvec.hpp"
#include "btn/errors.hpp"
#include "btn/rng.hpp"

namespace btn {

/// An integer key vector `a` whose dot products with the dataset are
/// pairwise distinct, together with those values sorted increasingly and the
/// permutation that realizes the order: b[i] = a . x^{perm[i]}.
struct separating_key {
    std::vector<bigint> a;
    std::vector<bigint> b;
    std::vector<std::size_t> perm;

    std::size_t size() const { return b.size(); }
};

inline bigint dot(const std::vector<bigint>& a, const bit_vector& x) {
    if (a.size() != x.size())
        throw dimension_error("key length does not match vector dimension");
    bigint acc = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (x[j]) acc += a[j];
    return acc;
}

/// True iff all dataset dot products with `a` are pairwise distinct.
inline bool separates(const std::vector<bigint>& a, const dataset& data) {
    std::map<bigint, std::size_t> seen;
    for (std::size_t i = 0; i < data.size(); ++i)
        if (!seen.emplace(dot(a, data.vectors[i]), i).second) return false;
    return true;
}

/// a_j = 2^j. Distinct binary vectors are distinct binary numerals, so this
/// key always separates.
inline std::vector<bigint> find_separating_vector_pow2(const dataset& data) {
    std::vector<bigint> a(data.dim);
    for (std::size_t j = 0; j < data.dim; ++j) a[j] = bigint(1) << j;
    if (!separates(a, data))
        throw state_error("powers-of-two key failed to separate (duplicate rows?)");
    return a;
}

/// Draws coordinates uniformly from [-bound, bound] until the key separates.
/// Produces small human-readable weights at the cost of retries.
inline std::vector<bigint> find_separating_vector_random(const dataset& data,
                                                         std::uint64_t seed,
                                                         std::int64_t bound,
                                                         std::size_t max_attempts) {
    if (bound < 1) throw input_error("random key bound must be >= 1");
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        rng_engine g = attempt_engine(seed, attempt);
        std::vector<bigint> a(data.dim);
        for (auto& c : a) c = rand_in(g, -bound, bound);
        if (separates(a, data)) return a;
    }
    throw search_exhausted("no separating key with coordinates in [-" +
                           std::to_string(bound) + ", " + std::to_string(bound) +
                           "] found in " + std::to_string(max_attempts) +
                           " attempts");
}

/// Sorts the dataset by key value. Throws key_collision (with the two
/// offending original row indices) if `a` does not separate.
inline separating_key sort_by_key(const dataset& data, std::vector<bigint> a) {
    std::vector<bigint> values(data.size());
    std::map<bigint, std::size_t> seen;
    for (std::size_t i = 0; i < data.size(); ++i) {
        values[i] = dot(a, data.vectors[i]);
        auto [it, fresh] = seen.emplace(values[i], i);
        if (!fresh) throw key_collision(it->second, i);
    }
    std::vector<std::size_t> perm(data.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
    separating_key key;
    key.a = std::move(a);
    key.perm = std::move(perm);
    key.b.reserve(data.size());
    for (std::size_t i : key.perm) key.b.push_back(values[i]);
    return key;
}

/// Default key: powers of two, sorted.
inline separating_key make_key(const dataset& data) {
    return sort_by_key(data, find_separating_vector_pow2(data));
}

/// The i-th vector in key order.
inline const bit_vector& sorted_vector(const dataset& data,
                                       const separating_key& key, std::size_t i) {
    return data.vectors[key.perm[i]];
}

/// Step vector: bits 0..i are 1, bits i+1..s-1 are 0.
inline bit_vector make_step_vector(std::size_t i, std::size_t s) {
    if (i >= s)
        throw range_error("step level " + std::to_string(i) +
                          " out of range for dimension " + std::to_string(s));
    std::vector<std::uint8_t> bits(s, 0);
    std::fill(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(i) + 1, 1);
    return bit_vector(std::move(bits));
}

/// Block/offset decomposition of the sorted key values: r = ceil(sqrt(n)),
/// index i = block * r + offset. The value table is padded to r^2 entries by
/// repeating the largest key so later telescopic constructions can index it
/// uniformly. Only the largest-key vector can ever read padded slots.
struct sqrt_decomposition {
    std::size_t r = 0;
    std::vector<bigint> padded_b;  // r^2 entries, padded_b[i] = b[min(i, n-1)]

    static sqrt_decomposition from(const separating_key& key) {
        sqrt_decomposition dec;
        const std::size_t n = key.size();
        while (dec.r * dec.r < n) ++dec.r;
        dec.padded_b.reserve(dec.r * dec.r);
        for (std::size_t i = 0; i < dec.r * dec.r; ++i)
            dec.padded_b.push_back(key.b[std::min(i, n - 1)]);
        return dec;
    }

    /// Start key of block k (the interval [start_of(k), start_of(k+1)) holds
    /// that block's key values).
    const bigint& start_of(std::size_t block) const { return padded_b[block * r]; }

    std::size_t block_of(std::size_t index) const { return index / r; }
    std::size_t offset_of(std::size_t index) const { return index % r; }
};

}  // namespace btn
