#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "btn/bigint.hpp"
#include "btn/bitvec.hpp"
#include "btn/errors.hpp"
#include "btn/network.hpp"
#include "btn/rng.hpp"
#include "btn/verify.hpp"

namespace btn {

/// Pairwise-overlap statistic: M is the largest number of coordinates where
/// two dataset vectors are both 1; ones[i] counts the 1s of row i.
struct sparsity_stats {
    std::size_t max_shared_ones = 0;  // M
    std::vector<std::size_t> ones;
};

inline sparsity_stats compute_sparsity(const dataset& data) {
    if (data.size() < 2)
        throw input_error("sparsity statistic needs at least two vectors");
    sparsity_stats s;
    s.ones.reserve(data.size());
    for (const auto& v : data.vectors) s.ones.push_back(v.count_ones());
    for (std::size_t i = 0; i < data.size(); ++i) {
        for (std::size_t j = i + 1; j < data.size(); ++j) {
            std::size_t shared = 0;
            for (std::size_t c = 0; c < data.dim; ++c)
                if (data.vectors[i][c] && data.vectors[j][c]) ++shared;
            if (shared > s.max_shared_ones) s.max_shared_ones = shared;
        }
    }
    return s;
}

/// Output width for the random-sign encoder: ceil(8 * sqrt(2M) * ln n).
/// M = 0 (no pair shares a 1) lies outside the regime of that bound, which
/// would give width 0; we fall back to ceil(2 * log2 n) there.
inline std::size_t random_sign_dimension(std::size_t n, std::size_t max_shared_ones) {
    if (n < 2) throw input_error("need at least two vectors");
    if (max_shared_ones == 0)
        return static_cast<std::size_t>(
            std::ceil(2.0 * std::log2(static_cast<double>(n))));
    const double v = 8.0 * std::sqrt(2.0 * static_cast<double>(max_shared_ones)) *
                     std::log(static_cast<double>(n));
    return static_cast<std::size_t>(std::ceil(v));
}

struct random_sign_result {
    layered_network net;
    std::size_t attempts = 0;  // 1-based count of draws used
};

namespace detail {

template <typename Eval>
bool codes_distinct(const dataset& data, const Eval& eval) {
    std::set<bit_vector> seen;
    for (const auto& x : data.vectors)
        if (!seen.insert(eval(x)).second) return false;
    return true;
}

}  // namespace detail

/// Two-layer encoder with every weight drawn fairly from {-1, +1} and all
/// thresholds 1. Draws whole weight matrices until the encoder is perfect on
/// the dataset (checked exhaustively before returning).
inline random_sign_result build_random_sign_encoder(
    const dataset& data, std::uint64_t seed, std::size_t max_attempts,
    std::optional<std::size_t> width_override = std::nullopt) {
    if (data.size() < 2) throw input_error("need at least two vectors");
    const std::size_t d =
        width_override ? *width_override
                       : random_sign_dimension(data.size(),
                                               compute_sparsity(data).max_shared_ones);
    if (d == 0) throw input_error("encoder width must be >= 1");

    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        rng_engine g = attempt_engine(seed, attempt);
        layered_network net;
        net.input_dim = data.dim;
        layer out;
        out.gates.reserve(d);
        for (std::size_t k = 0; k < d; ++k) {
            threshold_gate gate;
            gate.weights.reserve(data.dim);
            for (std::size_t j = 0; j < data.dim; ++j)
                gate.weights.push_back(rand_bit(g) ? 1 : -1);
            gate.threshold = 1;
            out.gates.push_back(std::move(gate));
        }
        net.layers.push_back(std::move(out));
        net.middle_index = net.layer_count();

        if (detail::codes_distinct(data, [&](const bit_vector& x) {
                return eval_network(net, x).back();
            }))
            return {std::move(net), attempt + 1};
    }
    throw search_exhausted("no injective random-sign encoder in " +
                           std::to_string(max_attempts) + " attempts");
}

/// Output bit k is the parity of the input restricted to subset k. Not a
/// threshold network by itself; see parity_to_threshold for the gate form.
struct parity_spec {
    std::size_t input_dim = 0;
    std::vector<std::vector<std::size_t>> subsets;
    std::uint64_t seed = 0;

    std::size_t width() const { return subsets.size(); }
};

inline std::uint8_t eval_parity(const parity_spec& spec, std::size_t k,
                                const bit_vector& x) {
    std::size_t ones = 0;
    for (std::size_t j : spec.subsets[k]) ones += x[j];
    return static_cast<std::uint8_t>(ones & 1u);
}

inline bit_vector eval_parity_code(const parity_spec& spec, const bit_vector& x) {
    if (x.size() != spec.input_dim)
        throw dimension_error("input width does not match parity spec");
    std::vector<std::uint8_t> bits(spec.width());
    for (std::size_t k = 0; k < spec.width(); ++k) bits[k] = eval_parity(spec, k, x);
    return bit_vector(std::move(bits));
}

struct parity_result {
    parity_spec spec;
    std::size_t attempts = 0;
};

/// Draws 2*ceil(log2 n) random subsets (each coordinate kept with
/// probability 1/2) until the parity codes of the dataset are pairwise
/// distinct. Each failed draw is discarded wholesale.
inline parity_result build_parity_encoder(const dataset& data, std::uint64_t seed,
                                          std::size_t max_attempts) {
    if (data.size() < 2) throw input_error("need at least two vectors");
    const std::size_t d = 2 * index_code_width(data.size());

    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        rng_engine g = attempt_engine(seed, attempt);
        parity_spec spec;
        spec.input_dim = data.dim;
        spec.seed = seed;
        spec.subsets.resize(d);
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t j = 0; j < data.dim; ++j)
                if (rand_bit(g)) spec.subsets[k].push_back(j);

        if (detail::codes_distinct(
                data, [&](const bit_vector& x) { return eval_parity_code(spec, x); }))
            return {std::move(spec), attempt + 1};
    }
    throw search_exhausted("no injective parity encoder in " +
                           std::to_string(max_attempts) + " attempts");
}

/// Three-layer threshold network computing exactly the parity functions of
/// `spec` on all of {0,1}^D. Per output k there is a bank of |S_k| counting
/// gates [ones in S_k >= i+1]; the output gate adds the bank with
/// alternating signs +1, -1, +1, ... and threshold 1, which leaves 1 exactly
/// when the count is odd. An empty subset yields a constant-0 output gate.
inline layered_network parity_to_threshold(const parity_spec& spec) {
    const std::size_t D = spec.input_dim;
    layered_network net;
    net.input_dim = D;

    layer hidden;
    std::vector<std::size_t> bank_offset(spec.width(), 0);
    for (std::size_t k = 0; k < spec.width(); ++k) {
        bank_offset[k] = hidden.gates.size();
        const auto& subset = spec.subsets[k];
        for (std::size_t i = 0; i < subset.size(); ++i) {
            threshold_gate g;
            g.weights.assign(D, 0);
            for (std::size_t j : subset) g.weights[j] = 1;
            g.threshold = bigint(i) + 1;
            hidden.gates.push_back(std::move(g));
        }
    }
    const std::size_t hidden_width = hidden.gates.size();
    net.layers.push_back(std::move(hidden));

    layer out;
    out.gates.reserve(spec.width());
    for (std::size_t k = 0; k < spec.width(); ++k) {
        threshold_gate g;
        g.weights.assign(hidden_width, 0);
        for (std::size_t i = 0; i < spec.subsets[k].size(); ++i)
            g.weights[bank_offset[k] + i] = (i % 2 == 0) ? 1 : -1;
        g.threshold = 1;
        out.gates.push_back(std::move(g));
    }
    net.layers.push_back(std::move(out));
    net.middle_index = net.layer_count();
    return net;
}

/// Exact probability that a fair +-1 walk of m steps ends at 0 (even m) or
/// at +1 (odd m), with the corresponding closed-form lower bound checked by
/// cross-squaring in exact integer arithmetic:
///   even m:  C(m, m/2)   / 2^m  >=  1 / sqrt(2m)
///   odd  m:  C(m,(m-1)/2)/ 2^m  >=  1 / (2 sqrt(m))
struct binomial_check {
    bigrat probability;
    bool bound_holds = false;
};

inline binomial_check central_binomial_check(unsigned m) {
    if (m == 0) throw input_error("need m >= 1");
    const bigint c = binomial(m, m / 2);  // == C(m,(m-1)/2) for odd m
    const bigint pow2 = bigint(1) << m;
    binomial_check result;
    result.probability = bigrat(c, pow2);
    // p >= 1/sqrt(2m)   <=>  c^2 * 2m >= 4^m
    // p >= 1/(2 sqrt(m)) <=>  c^2 * 4m >= 4^m
    const bigint lhs = c * c * ((m % 2 == 0) ? bigint(2) * m : bigint(4) * m);
    result.bound_holds = lhs >= pow2 * pow2;
    return result;
}

/// Reference codec: plain index tables, encode x^i -> binary(i) and back.
/// The ground-truth oracle that every constructed autoencoder is compared
/// against in differential tests.
class lookup_codec {
public:
    explicit lookup_codec(const dataset& data)
        : input_dim_(data.dim), code_width_(index_code_width(data.size())) {
        for (std::size_t i = 0; i < data.size(); ++i) {
            bit_vector code = binary_code(i, code_width_);
            encode_.emplace(data.vectors[i], code);
            decode_.emplace(std::move(code), data.vectors[i]);
        }
    }

    std::size_t code_width() const { return code_width_; }

    const bit_vector& encode(const bit_vector& x) const {
        auto it = encode_.find(x);
        if (it == encode_.end()) throw input_error("vector not in codec table");
        return it->second;
    }

    const bit_vector& decode(const bit_vector& code) const {
        auto it = decode_.find(code);
        if (it == decode_.end()) throw input_error("code not in codec table");
        return it->second;
    }

    // verifier interface
    std::size_t input_size() const { return input_dim_; }
    std::vector<bit_vector> activations(const bit_vector& x) const {
        const bit_vector& z = encode(x);
        return {x, z, decode(z)};
    }
    std::optional<std::size_t> middle_position() const { return 1; }

private:
    std::size_t input_dim_;
    std::size_t code_width_;
    std::map<bit_vector, bit_vector> encode_;
    std::map<bit_vector, bit_vector> decode_;
};

}  // namespace btn
