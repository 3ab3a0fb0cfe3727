#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "btn/bitvec.hpp"
#include "btn/errors.hpp"
#include "btn/network.hpp"
#include "btn/rng.hpp"

// Construction-independent checking of the perfect-encoder and
// perfect-autoencoder properties. The checkers are templates over any type
// exposing the small evaluation interface
//
//     std::size_t input_size() const;
//     std::vector<bit_vector> activations(const bit_vector&) const;
//     std::optional<std::size_t> middle_position() const;
//
// so explicit truth tables can be verified alongside gate networks.

namespace btn {

/// Two rows that received the same code. Full traces kept for debugging.
struct collision_report {
    std::size_t first;
    std::size_t second;
    bit_vector code;
    std::vector<bit_vector> first_trace;
    std::vector<bit_vector> second_trace;
};

/// A row whose reconstruction differs from the input.
struct mismatch_report {
    std::size_t index;
    bit_vector got;
    std::vector<bit_vector> trace;
};

struct encoder_check {
    bool ok = false;
    std::optional<collision_report> failure;
};

struct autoencoder_check {
    bool ok = false;                                // output == input on every row
    std::optional<mismatch_report> failure;
    bool middle_ok = false;                         // codes pairwise distinct
    std::optional<collision_report> middle_failure;

    bool passed() const { return ok && middle_ok; }
};

namespace detail {

// Distinctness of trace entries at `position`; first failure by lowest
// index pair.
template <typename Net>
encoder_check check_distinct_at(const Net& net, const dataset& data,
                                std::size_t position) {
    encoder_check result;
    std::map<bit_vector, std::size_t> seen;
    for (std::size_t i = 0; i < data.size(); ++i) {
        auto trace = net.activations(data.vectors[i]);
        const bit_vector& code = trace[position];
        auto [it, fresh] = seen.emplace(code, i);
        if (!fresh) {
            result.ok = false;
            result.failure = collision_report{
                it->second, i, code, net.activations(data.vectors[it->second]),
                std::move(trace)};
            return result;
        }
    }
    result.ok = true;
    return result;
}

}  // namespace detail

/// Perfect-encoder check: the n final outputs must be pairwise distinct.
template <typename Net>
encoder_check is_perfect_encoder(const Net& net, const dataset& data) {
    if (net.input_size() != data.dim)
        throw dimension_error("network expects inputs of dimension " +
                              std::to_string(net.input_size()));
    const std::size_t last = net.activations(data.vectors[0]).size() - 1;
    return detail::check_distinct_at(net, data, last);
}

/// Perfect-autoencoder check: output equals input on every row, and the
/// middle-layer codes are additionally re-checked for distinctness (the
/// encoder property implied by a perfect autoencoder), reported separately.
template <typename Net>
autoencoder_check is_perfect_autoencoder(const Net& net, const dataset& data) {
    if (net.input_size() != data.dim)
        throw dimension_error("network expects inputs of dimension " +
                              std::to_string(net.input_size()));
    auto middle = net.middle_position();
    if (!middle) throw state_error("autoencoder check needs a designated middle layer");

    autoencoder_check result;
    result.ok = true;
    for (std::size_t i = 0; i < data.size(); ++i) {
        auto trace = net.activations(data.vectors[i]);
        if (trace.back() != data.vectors[i]) {
            result.ok = false;
            result.failure = mismatch_report{i, trace.back(), std::move(trace)};
            break;
        }
    }
    auto mid = detail::check_distinct_at(net, data, *middle);
    result.middle_ok = mid.ok;
    result.middle_failure = std::move(mid.failure);
    return result;
}

struct equiv_result {
    bool equivalent = false;
    std::optional<bit_vector> counterexample;
};

/// Compares two bit-vector functions on all 2^input_dim inputs.
template <typename FnA, typename FnB>
equiv_result exhaustive_equiv(const FnA& a, const FnB& b, std::size_t input_dim) {
    if (input_dim > 20)
        throw resource_error("exhaustive comparison limited to dimension 20");
    const std::uint64_t total = std::uint64_t{1} << input_dim;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<std::uint8_t> bits(input_dim);
        for (std::size_t j = 0; j < input_dim; ++j)
            bits[j] = static_cast<std::uint8_t>((mask >> j) & 1u);
        bit_vector x(std::move(bits));
        if (a(x) != b(x)) return {false, std::move(x)};
    }
    return {true, std::nullopt};
}

/// Explicit encode/decode tables satisfying the evaluation interface, so
/// hand-specified codecs (arbitrary Boolean maps, not threshold networks)
/// can run through the same verifiers.
class truth_table_codec {
public:
    truth_table_codec(std::size_t input_dim, std::size_t code_dim,
                      std::vector<std::pair<bit_vector, bit_vector>> encode_rows,
                      std::vector<std::pair<bit_vector, bit_vector>> decode_rows)
        : input_dim_(input_dim), code_dim_(code_dim) {
        for (auto& [x, z] : encode_rows) {
            if (x.size() != input_dim_ || z.size() != code_dim_)
                throw dimension_error("encode row width mismatch");
            encode_.emplace(std::move(x), std::move(z));
        }
        for (auto& [z, y] : decode_rows) {
            if (z.size() != code_dim_ || y.size() != input_dim_)
                throw dimension_error("decode row width mismatch");
            decode_.emplace(std::move(z), std::move(y));
        }
    }

    std::size_t input_size() const { return input_dim_; }
    std::size_t code_size() const { return code_dim_; }

    const bit_vector& encode(const bit_vector& x) const {
        auto it = encode_.find(x);
        if (it == encode_.end()) throw input_error("input not in encode table");
        return it->second;
    }

    const bit_vector& decode(const bit_vector& z) const {
        auto it = decode_.find(z);
        if (it == decode_.end()) throw input_error("code not in decode table");
        return it->second;
    }

    std::vector<bit_vector> activations(const bit_vector& x) const {
        const bit_vector& z = encode(x);
        return {x, z, decode(z)};
    }

    std::optional<std::size_t> middle_position() const { return 1; }

private:
    std::size_t input_dim_;
    std::size_t code_dim_;
    std::map<bit_vector, bit_vector> encode_;
    std::map<bit_vector, bit_vector> decode_;
};

struct mutation_report {
    std::size_t trials = 0;
    std::size_t detected = 0;

    double detection_fraction() const {
        return trials == 0 ? 0.0 : static_cast<double>(detected) / trials;
    }
};

/// Applies single +-1 perturbations to uniformly chosen scalar parameters
/// (any weight or threshold of any gate) and reports how many are caught by
/// the autoencoder check. Deterministic for a fixed seed.
inline mutation_report mutation_sensitivity(const layered_network& net,
                                            const dataset& data,
                                            std::size_t trials,
                                            std::uint64_t seed) {
    mutation_report report;
    if (trials == 0) return report;

    std::size_t total_params = 0;
    for (const auto& l : net.layers)
        for (const auto& g : l.gates) total_params += g.weights.size() + 1;
    if (total_params == 0) throw input_error("network has no parameters to mutate");

    for (std::size_t t = 0; t < trials; ++t) {
        rng_engine g = attempt_engine(seed, t);
        std::size_t pick = rand_below(g, total_params);
        const bigint delta = rand_bit(g) ? 1 : -1;

        layered_network mutant = net;
        bool applied = false;
        for (auto& l : mutant.layers) {
            for (auto& gate : l.gates) {
                const std::size_t span = gate.weights.size() + 1;
                if (pick < span) {
                    if (pick < gate.weights.size())
                        gate.weights[pick] += delta;
                    else
                        gate.threshold += delta;
                    applied = true;
                    break;
                }
                pick -= span;
            }
            if (applied) break;
        }

        if (!is_perfect_autoencoder(mutant, data).passed()) ++report.detected;
    }
    report.trials = trials;
    return report;
}

}  // namespace btn
