#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "btn/bigint.hpp"
#include "btn/bitvec.hpp"
#include "btn/encoders.hpp"
#include "btn/errors.hpp"
#include "btn/network.hpp"
#include "btn/separation.hpp"

namespace btn {

/// Three-layer autoencoder, widths D/n/D, middle = layer 2.
/// Step encoder followed by a code layer whose table is the sorted dataset
/// itself, so the step vector h^i decodes back to the i-th vector.
inline layered_network build_auto3(const dataset& data, const separating_key& key) {
    std::vector<bit_vector> codes;
    codes.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i)
        codes.push_back(sorted_vector(data, key, i));

    layered_network net = build_step_encoder(key);
    net.layers.push_back(build_gmap_layer(codes));
    net.middle_index = 2;
    return net;
}

namespace detail {

/// Sorted dataset padded to r^2 rows by repeating the last vector, mirroring
/// the key-table padding of sqrt_decomposition.
inline const bit_vector& padded_row(const dataset& data, const separating_key& key,
                                    std::size_t index) {
    return sorted_vector(data, key, std::min(index, data.size() - 1));
}

/// Decoder half shared by the 5-layer and 7-layer constructions: a selector
/// layer of r*D gates (one per block/coordinate pair) followed by a D-wide
/// OR layer. Selector gate (i, j) telescopes coordinate j of the padded
/// dataset over the block half and adds the offset-transition term
/// beta2_i - beta2_{i+1}; only the gate at the active offset can reach its
/// threshold of 2. The dummy trailing offset node is folded away: for
/// i = r-1 the -1 term is simply dropped.
inline void append_sqrt_decoder(layered_network& net, const dataset& data,
                                const separating_key& key,
                                const sqrt_decomposition& dec) {
    const std::size_t D = data.dim;
    const std::size_t r = dec.r;

    layer selector;
    selector.gates.reserve(r * D);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < D; ++j) {
            threshold_gate g;
            g.weights.assign(2 * r, 0);
            g.weights[0] = padded_row(data, key, i)[j];
            for (std::size_t m = 1; m < r; ++m)
                g.weights[m] = bigint(padded_row(data, key, m * r + i)[j]) -
                               bigint(padded_row(data, key, (m - 1) * r + i)[j]);
            g.weights[r + i] += 1;
            if (i + 1 < r) g.weights[r + i + 1] -= 1;
            g.threshold = 2;
            selector.gates.push_back(std::move(g));
        }
    }
    net.layers.push_back(std::move(selector));

    layer out;
    out.gates.reserve(D);
    for (std::size_t j = 0; j < D; ++j) {
        threshold_gate g;
        g.weights.assign(r * D, 0);
        for (std::size_t i = 0; i < r; ++i) g.weights[i * D + j] = 1;
        g.threshold = 1;
        out.gates.push_back(std::move(g));
    }
    net.layers.push_back(std::move(out));
}

}  // namespace detail

/// Five-layer autoencoder, widths D/(r+D)/2r/rD/D, middle = layer 3.
/// Square-root encoder plus the block/offset selector decoder.
inline layered_network build_auto5_sqrt(const dataset& data,
                                        const separating_key& key,
                                        const sqrt_decomposition& dec) {
    layered_network net = build_sqrt_encoder(key, dec);
    detail::append_sqrt_decoder(net, data, key, dec);
    net.middle_index = 3;
    return net;
}

/// Three-layer autoencoder for the step vectors h^0[s]..h^{s-1}[s], widths
/// s/ceil(log s)/s, middle = layer 2. The middle layer holds the binary
/// representation of the step level (gate h carries bit h, so gate h feeds
/// the decoder with weight 2^h); decoder gate j is [sum_h gamma_h 2^h >= j],
/// which makes gate 0 constant 1 -- exactly the always-on leading step bit.
inline layered_network build_step_auto(std::size_t s) {
    if (s == 0) throw input_error("step dimension must be >= 1");
    const std::size_t m = index_code_width(s);

    std::vector<bit_vector> codes;
    codes.reserve(s);
    for (std::size_t i = 0; i < s; ++i) codes.push_back(binary_code_lsb(i, m));

    layered_network net;
    net.input_dim = s;
    net.layers.push_back(build_gmap_layer(codes));

    layer out;
    out.gates.reserve(s);
    for (std::size_t j = 0; j < s; ++j) {
        threshold_gate g;
        g.weights.reserve(m);
        for (std::size_t h = 0; h < m; ++h) g.weights.push_back(bigint(1) << h);
        g.threshold = bigint(j);
        out.gates.push_back(std::move(g));
    }
    net.layers.push_back(std::move(out));
    net.middle_index = 2;
    return net;
}

/// Five-layer autoencoder, widths D/n/ceil(log n)/n/D, middle = layer 3.
/// The three-layer autoencoder with its n-wide middle replaced by the step
/// autoencoder, compressing the step vector down to its binary index.
inline layered_network build_auto5_log(const dataset& data,
                                       const separating_key& key) {
    const std::size_t n = data.size();
    layered_network step_auto = build_step_auto(n);

    std::vector<bit_vector> codes;
    codes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) codes.push_back(sorted_vector(data, key, i));

    layered_network net = build_step_encoder(key);
    net.layers.push_back(step_auto.layers[0]);
    net.layers.push_back(step_auto.layers[1]);
    net.layers.push_back(build_gmap_layer(codes));
    net.middle_index = 3;
    return net;
}

/// Seven-layer autoencoder, middle width 2*ceil(log r), r = ceil(sqrt(n)).
/// The five-layer square-root autoencoder with each of the two step-vector
/// banks of its middle layer routed through an independent step autoencoder;
/// the two compressed banks form the new middle layer, and the restoring
/// layers feed the original selector decoder unchanged.
inline layered_network build_auto7(const dataset& data, const separating_key& key,
                                   const sqrt_decomposition& dec) {
    const std::size_t r = dec.r;
    const std::size_t m = index_code_width(r);
    layered_network bank_auto = build_step_auto(r);

    layered_network net = build_sqrt_encoder(key, dec);

    // Compress both banks: block-diagonal copies of the step autoencoder's
    // first layer.
    layer compress;
    compress.gates.reserve(2 * m);
    for (std::size_t half = 0; half < 2; ++half) {
        for (const auto& g : bank_auto.layers[0].gates) {
            threshold_gate wide;
            wide.weights.assign(2 * r, 0);
            for (std::size_t i = 0; i < r; ++i)
                wide.weights[half * r + i] = g.weights[i];
            wide.threshold = g.threshold;
            compress.gates.push_back(std::move(wide));
        }
    }
    net.layers.push_back(std::move(compress));

    // Restore both banks from their binary codes.
    layer restore;
    restore.gates.reserve(2 * r);
    for (std::size_t half = 0; half < 2; ++half) {
        for (const auto& g : bank_auto.layers[1].gates) {
            threshold_gate wide;
            wide.weights.assign(2 * m, 0);
            for (std::size_t h = 0; h < m; ++h)
                wide.weights[half * m + h] = g.weights[h];
            wide.threshold = g.threshold;
            restore.gates.push_back(std::move(wide));
        }
    }
    net.layers.push_back(std::move(restore));

    detail::append_sqrt_decoder(net, data, key, dec);
    net.middle_index = 4;
    return net;
}

}  // namespace btn
