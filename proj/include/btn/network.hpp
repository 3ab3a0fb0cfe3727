#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "btn/bigint.hpp"
#include "btn/bitvec.hpp"
#include "btn/errors.hpp"

namespace btn {

/// One gate [w . x >= threshold] with exact integer parameters.
struct threshold_gate {
    std::vector<bigint> weights;
    bigint threshold;

    bool operator==(const threshold_gate&) const = default;
};

/// Gates evaluated in parallel over one input vector; all gates of a layer
/// share the fan-in of the vector below.
struct layer {
    std::vector<threshold_gate> gates;

    std::size_t width() const { return gates.size(); }

    bool operator==(const layer&) const = default;
};

/// A layered network of threshold gates. Layer positions follow the
/// convention that the input vector is layer 1, so a network with T gate
/// layers spans positions 1..T+1. `middle_index` designates the layer whose
/// activation is the compressed code; for pure encoders it may equal the
/// output position.
struct layered_network {
    std::size_t input_dim = 0;
    std::vector<layer> layers;
    std::optional<std::size_t> middle_index;

    /// Total layer count, counting the input as layer 1.
    std::size_t layer_count() const { return layers.size() + 1; }

    std::size_t output_dim() const {
        return layers.empty() ? input_dim : layers.back().width();
    }

    /// Width of the vector at 1-based layer position (1 = input).
    std::size_t width_at(std::size_t position) const {
        if (position == 0 || position > layer_count())
            throw range_error("layer position out of range");
        return position == 1 ? input_dim : layers[position - 2].width();
    }

    // --- verifier interface ---
    std::size_t input_size() const { return input_dim; }
    std::vector<bit_vector> activations(const bit_vector& input) const;
    std::optional<std::size_t> middle_position() const {
        if (!middle_index) return std::nullopt;
        return *middle_index - 1;  // index into the activation trace
    }

    bool operator==(const layered_network&) const = default;
};

/// All activation vectors of one evaluation, input first, output last.
using eval_trace = std::vector<bit_vector>;

inline std::uint8_t eval_gate(const threshold_gate& gate, const bit_vector& input) {
    if (input.size() != gate.weights.size())
        throw dimension_error("gate fan-in " + std::to_string(gate.weights.size()) +
                              " does not match input width " +
                              std::to_string(input.size()));
    bigint acc = 0;
    for (std::size_t j = 0; j < input.size(); ++j)
        if (input[j]) acc += gate.weights[j];
    return acc >= gate.threshold ? 1 : 0;
}

inline bit_vector eval_layer(const layer& l, const bit_vector& input) {
    std::vector<std::uint8_t> out;
    out.reserve(l.gates.size());
    for (const auto& g : l.gates) out.push_back(eval_gate(g, input));
    return bit_vector(std::move(out));
}

inline eval_trace eval_network(const layered_network& net, const bit_vector& input) {
    if (input.size() != net.input_dim)
        throw dimension_error("input width " + std::to_string(input.size()) +
                              " does not match network input dimension " +
                              std::to_string(net.input_dim));
    eval_trace trace;
    trace.reserve(net.layers.size() + 1);
    trace.push_back(input);
    for (const auto& l : net.layers) trace.push_back(eval_layer(l, trace.back()));
    return trace;
}

inline std::vector<bit_vector> layered_network::activations(
    const bit_vector& input) const {
    return eval_network(*this, input);
}

/// Throws dimension_error unless every gate's fan-in matches the width of
/// the layer below, and range errors for a middle index outside 2..L.
inline void validate_network(const layered_network& net) {
    std::size_t below = net.input_dim;
    for (std::size_t t = 0; t < net.layers.size(); ++t) {
        for (const auto& g : net.layers[t].gates)
            if (g.weights.size() != below)
                throw dimension_error("layer " + std::to_string(t + 2) +
                                      " gate fan-in mismatch");
        below = net.layers[t].width();
    }
    if (net.middle_index) {
        const std::size_t k = *net.middle_index;
        if (k < 2 || k > net.layer_count())
            throw range_error("middle index " + std::to_string(k) +
                              " outside layer range");
    }
}

/// Concatenates two networks; `back` consumes `front`'s output. When
/// `middle_at_seam` is set, the joined network's middle layer is front's
/// output position.
inline layered_network stack(const layered_network& front,
                             const layered_network& back,
                             bool middle_at_seam = false) {
    if (back.input_dim != front.output_dim())
        throw dimension_error("stack: front outputs " +
                              std::to_string(front.output_dim()) +
                              " values but back expects " +
                              std::to_string(back.input_dim));
    layered_network net;
    net.input_dim = front.input_dim;
    net.layers = front.layers;
    net.layers.insert(net.layers.end(), back.layers.begin(), back.layers.end());
    if (middle_at_seam) net.middle_index = front.layer_count();
    return net;
}

/// Splits at the designated middle layer: the encoder ends there (and keeps
/// it as its own output/middle), the decoder starts right after.
/// stack(encoder, decoder, true) reproduces the original network.
inline std::pair<layered_network, layered_network> split_at_middle(
    const layered_network& net) {
    if (!net.middle_index) throw state_error("network has no middle layer designated");
    const std::size_t k = *net.middle_index;
    if (k < 2 || k > net.layer_count())
        throw range_error("middle index out of range");

    layered_network encoder;
    encoder.input_dim = net.input_dim;
    encoder.layers.assign(net.layers.begin(),
                          net.layers.begin() + static_cast<std::ptrdiff_t>(k - 1));
    encoder.middle_index = k;

    layered_network decoder;
    decoder.input_dim = net.width_at(k);
    decoder.layers.assign(net.layers.begin() + static_cast<std::ptrdiff_t>(k - 1),
                          net.layers.end());
    return {std::move(encoder), std::move(decoder)};
}

struct network_stats {
    std::vector<std::size_t> widths;  // input first, output last
    std::size_t gate_count = 0;
    bigint max_abs_weight = 0;
    bigint max_abs_threshold = 0;
    std::optional<std::size_t> middle_index;
};

inline network_stats compute_stats(const layered_network& net) {
    network_stats s;
    s.middle_index = net.middle_index;
    if (net.input_dim == 0 && net.layers.empty()) return s;  // empty network
    s.widths.push_back(net.input_dim);
    for (const auto& l : net.layers) {
        s.widths.push_back(l.width());
        s.gate_count += l.width();
        for (const auto& g : l.gates) {
            for (const auto& w : g.weights)
                if (abs(w) > s.max_abs_weight) s.max_abs_weight = abs(w);
            if (abs(g.threshold) > s.max_abs_threshold)
                s.max_abs_threshold = abs(g.threshold);
        }
    }
    return s;
}

}  // namespace btn
