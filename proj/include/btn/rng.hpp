#pragma once

#include <cstdint>
#include <random>

namespace btn {

// std::mt19937_64 output is fully specified by the standard, and we reduce
// it ourselves instead of going through std::uniform_int_distribution (whose
// algorithm is implementation-defined), so every stream is reproducible
// across platforms and standard libraries.
using rng_engine = std::mt19937_64;

// splitmix64 finalizer; maps (seed, stream) to an independent engine seed.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline rng_engine seeded_engine(std::uint64_t seed) { return rng_engine(seed); }

// Engine for attempt number `attempt` of a retrying search. The mapping is
// fixed so attempt results do not depend on evaluation order.
inline rng_engine attempt_engine(std::uint64_t seed, std::uint64_t attempt) {
    return rng_engine(mix64(seed, attempt));
}

inline std::uint8_t rand_bit(rng_engine& g) {
    return static_cast<std::uint8_t>(g() & 1u);
}

// Uniform-ish value in [0, bound); bound > 0.
inline std::uint64_t rand_below(rng_engine& g, std::uint64_t bound) {
    return g() % bound;
}

// Uniform-ish value in [lo, hi], inclusive.
inline std::int64_t rand_in(rng_engine& g, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    rand_below(g, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace btn
