#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "btn/bigint.hpp"
#include "btn/bitvec.hpp"
#include "btn/errors.hpp"
#include "btn/network.hpp"
#include "btn/separation.hpp"

namespace btn {

/// Two-layer encoder mapping the i-th vector (in key order) to the step
/// vector with i+1 leading ones: output gate j is [a . x >= b_j].
inline layered_network build_step_encoder(const separating_key& key) {
    layered_network net;
    net.input_dim = key.a.size();
    layer out;
    out.gates.reserve(key.size());
    for (const auto& b_j : key.b) out.gates.push_back({key.a, b_j});
    net.layers.push_back(std::move(out));
    net.middle_index = net.layer_count();
    return net;
}

/// Single layer translating step vectors to arbitrary prescribed codes:
/// gate j carries the successive differences of column j of the code table,
/// so on input h^i the weighted sum collapses to code[i][j]. Threshold 1.
///
/// The layer's fan-in may exceed the table size: the step vector is read
/// from positions [offset, offset + codes.size()), other inputs are ignored.
inline layer build_gmap_layer(const std::vector<bit_vector>& codes,
                              std::size_t fan_in, std::size_t offset) {
    if (codes.empty()) throw input_error("code table must be nonempty");
    const std::size_t s = codes.size();
    const std::size_t d = codes[0].size();
    if (offset + s > fan_in) throw dimension_error("code table exceeds layer fan-in");
    for (const auto& c : codes)
        if (c.size() != d) throw dimension_error("code vectors must share one width");
    if (d < 64 && s > (std::size_t{1} << d))
        throw input_error("more codes than the code width can hold");
    std::set<bit_vector> seen;
    for (std::size_t i = 0; i < s; ++i) {
        auto [it, fresh] = seen.insert(codes[i]);
        if (!fresh) {
            for (std::size_t j = 0; j < i; ++j)
                if (codes[j] == codes[i]) throw code_collision(j, i);
        }
    }

    layer l;
    l.gates.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
        threshold_gate g;
        g.weights.assign(fan_in, 0);
        g.weights[offset] = codes[0][j];
        for (std::size_t i = 1; i < s; ++i)
            g.weights[offset + i] = bigint(codes[i][j]) - bigint(codes[i - 1][j]);
        g.threshold = 1;
        l.gates.push_back(std::move(g));
    }
    return l;
}

inline layer build_gmap_layer(const std::vector<bit_vector>& codes) {
    return build_gmap_layer(codes, codes.size(), 0);
}

/// Three-layer encoder (widths D/n/ceil(log n)) mapping the i-th vector in
/// key order to the binary representation of i, most significant bit first.
inline layered_network build_binary_index_encoder(const separating_key& key) {
    const std::size_t n = key.size();
    const std::size_t d = index_code_width(n);
    std::vector<bit_vector> codes;
    codes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) codes.push_back(binary_code(i, d));

    layered_network net = build_step_encoder(key);
    net.layers.push_back(build_gmap_layer(codes));
    net.middle_index = net.layer_count();
    return net;
}

/// Three-layer encoder (widths D/(r+D)/2r) mapping the vector of sorted rank
/// i = k*r + offset to the pair of step vectors (h^k[r], h^off[r]).
///
/// Hidden layer: r block gates [a . x >= start_of(i)] plus D copy gates
/// [x_j >= 1]. Output layer: r copies of the block gates plus r offset gates
/// that compare a . x (rebuilt from the copies) against a telescopic sum
/// selecting the key table entry at the active block.
///
/// When n < r^2, the largest-key vector reads the padded table slots and
/// comes out as the all-ones pair (h^{r-1}, h^{r-1}) instead; every other
/// vector lands exactly on (h^k, h^off), and the map stays injective. For
/// square n the two descriptions coincide.
inline layered_network build_sqrt_encoder(const separating_key& key,
                                          const sqrt_decomposition& dec) {
    const std::size_t D = key.a.size();
    const std::size_t r = dec.r;

    layered_network net;
    net.input_dim = D;

    layer hidden;
    hidden.gates.reserve(r + D);
    for (std::size_t i = 0; i < r; ++i)
        hidden.gates.push_back({key.a, dec.start_of(i)});
    for (std::size_t j = 0; j < D; ++j) {
        threshold_gate copy;
        copy.weights.assign(D, 0);
        copy.weights[j] = 1;
        copy.threshold = 1;
        hidden.gates.push_back(std::move(copy));
    }
    net.layers.push_back(std::move(hidden));

    layer out;
    out.gates.reserve(2 * r);
    for (std::size_t i = 0; i < r; ++i) {
        threshold_gate copy;
        copy.weights.assign(r + D, 0);
        copy.weights[i] = 1;
        copy.threshold = 1;
        out.gates.push_back(std::move(copy));
    }
    for (std::size_t i = 0; i < r; ++i) {
        // [a . x - t_i >= 0] where t_i telescopes the padded key table over
        // the block gates; when block k is active, t_i = padded_b[k*r + i].
        threshold_gate g;
        g.weights.assign(r + D, 0);
        g.weights[0] = -dec.padded_b[i];
        for (std::size_t m = 1; m < r; ++m)
            g.weights[m] = -(dec.padded_b[m * r + i] - dec.padded_b[(m - 1) * r + i]);
        for (std::size_t j = 0; j < D; ++j) g.weights[r + j] = key.a[j];
        g.threshold = 0;
        out.gates.push_back(std::move(g));
    }
    net.layers.push_back(std::move(out));
    net.middle_index = net.layer_count();
    return net;
}

/// Four-layer encoder (widths D/(r+D)/2r/2*ceil(log r)): the square-root
/// encoder followed by two parallel code layers turning the block and offset
/// step vectors into their binary representations (most significant bit
/// first, block half then offset half).
inline layered_network build_log_encoder_4layer(const separating_key& key,
                                                const sqrt_decomposition& dec) {
    const std::size_t r = dec.r;
    const std::size_t m = index_code_width(r);
    std::vector<bit_vector> codes;
    codes.reserve(r);
    for (std::size_t i = 0; i < r; ++i) codes.push_back(binary_code(i, m));

    layered_network net = build_sqrt_encoder(key, dec);
    layer block_half = build_gmap_layer(codes, 2 * r, 0);
    layer offset_half = build_gmap_layer(codes, 2 * r, r);
    layer joined;
    joined.gates = std::move(block_half.gates);
    joined.gates.insert(joined.gates.end(),
                        std::make_move_iterator(offset_half.gates.begin()),
                        std::make_move_iterator(offset_half.gates.end()));
    net.layers.push_back(std::move(joined));
    net.middle_index = net.layer_count();
    return net;
}

}  // namespace btn
