#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "btn/bigint.hpp"
#include "btn/bitvec.hpp"
#include "btn/errors.hpp"
#include "btn/network.hpp"

// Wire formats. Networks travel as a single JSON document whose integers are
// decimal strings, so arbitrary-precision values survive round trips
// bit-exactly:
//
//   { "input_dim": 3,
//     "layers": [ { "weights": [["1","-2"], ...], "thresholds": ["1", ...] } ],
//     "middle_index": 2 | null }
//
// Datasets are plain text: one contiguous 0/1 string per line, '#' comments
// allowed, first non-comment line fixes the dimension.

namespace btn {

namespace detail {

inline bigint parse_bigint(const std::string& s, const std::string& where) {
    if (s.empty()) throw parse_error(where + ": empty integer string");
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw parse_error(where + ": bare minus sign");
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw parse_error(where + ": invalid integer string \"" + s + "\"");
    return bigint(s);
}

}  // namespace detail

inline nlohmann::json network_to_json(const layered_network& net) {
    nlohmann::json doc;
    doc["input_dim"] = net.input_dim;
    doc["layers"] = nlohmann::json::array();
    for (const auto& l : net.layers) {
        nlohmann::json jl;
        jl["weights"] = nlohmann::json::array();
        jl["thresholds"] = nlohmann::json::array();
        for (const auto& g : l.gates) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& w : g.weights) row.push_back(w.str());
            jl["weights"].push_back(std::move(row));
            jl["thresholds"].push_back(g.threshold.str());
        }
        doc["layers"].push_back(std::move(jl));
    }
    if (net.middle_index)
        doc["middle_index"] = *net.middle_index;
    else
        doc["middle_index"] = nullptr;
    return doc;
}

inline std::string serialize_network(const layered_network& net) {
    return network_to_json(net).dump(2) + "\n";
}

inline layered_network parse_network(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("network document: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("network document: expected an object");
    if (!doc.contains("input_dim") || !doc["input_dim"].is_number_unsigned())
        throw parse_error("network document: input_dim must be a nonnegative integer");
    if (!doc.contains("layers") || !doc["layers"].is_array())
        throw parse_error("network document: layers must be an array");

    layered_network net;
    net.input_dim = doc["input_dim"].get<std::size_t>();
    for (std::size_t t = 0; t < doc["layers"].size(); ++t) {
        const auto& jl = doc["layers"][t];
        const std::string where = "layer " + std::to_string(t + 2);
        if (!jl.is_object() || !jl.contains("weights") || !jl.contains("thresholds") ||
            !jl["weights"].is_array() || !jl["thresholds"].is_array())
            throw parse_error(where + ": expected weights and thresholds arrays");
        if (jl["weights"].size() != jl["thresholds"].size())
            throw parse_error(where + ": weights/thresholds length mismatch");
        layer l;
        for (std::size_t g = 0; g < jl["weights"].size(); ++g) {
            const auto& row = jl["weights"][g];
            if (!row.is_array())
                throw parse_error(where + ": weight rows must be arrays");
            threshold_gate gate;
            gate.weights.reserve(row.size());
            for (const auto& w : row) {
                if (!w.is_string())
                    throw parse_error(where + ": weights must be decimal strings");
                gate.weights.push_back(detail::parse_bigint(w.get<std::string>(), where));
            }
            if (!jl["thresholds"][g].is_string())
                throw parse_error(where + ": thresholds must be decimal strings");
            gate.threshold =
                detail::parse_bigint(jl["thresholds"][g].get<std::string>(), where);
            l.gates.push_back(std::move(gate));
        }
        net.layers.push_back(std::move(l));
    }
    if (doc.contains("middle_index") && !doc["middle_index"].is_null()) {
        if (!doc["middle_index"].is_number_unsigned())
            throw parse_error("network document: middle_index must be an integer or null");
        net.middle_index = doc["middle_index"].get<std::size_t>();
    }
    try {
        validate_network(net);
    } catch (const error& e) {
        throw parse_error(std::string("network document: ") + e.what());
    }
    return net;
}

/// Writer records generation parameters in comments; nothing time-dependent
/// is ever emitted, so identical inputs produce identical bytes.
inline std::string serialize_dataset(const dataset& data,
                                     const std::vector<std::string>& comments = {}) {
    std::ostringstream out;
    for (const auto& c : comments) out << "# " << c << "\n";
    for (const auto& v : data.vectors) out << v.to_string() << "\n";
    return out.str();
}

inline dataset parse_dataset(const std::string& text) {
    std::istringstream in(text);
    std::vector<bit_vector> vecs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        bit_vector v;
        try {
            v = bit_vector::from_string(line);
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (!vecs.empty() && v.size() != vecs[0].size())
            throw parse_error("line " + std::to_string(lineno) +
                              ": width differs from first vector");
        vecs.push_back(std::move(v));
    }
    if (vecs.empty()) throw parse_error("dataset file holds no vectors");
    try {
        return dataset::of(std::move(vecs));
    } catch (const error& e) {
        throw parse_error(e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write " + path);
    out << contents;
}

inline layered_network load_network(const std::string& path) {
    return parse_network(read_file(path));
}

inline dataset load_dataset(const std::string& path) {
    return parse_dataset(read_file(path));
}

/// Graphviz rendering: one node per gate labeled with its threshold, edges
/// labeled with their weights (zero-weight edges omitted), layers ranked
/// left to right.
inline std::string to_dot(const layered_network& net) {
    std::ostringstream out;
    out << "digraph btn {\n  rankdir=LR;\n  node [shape=circle];\n";
    out << "  { rank=same;";
    for (std::size_t j = 0; j < net.input_dim; ++j) out << " x" << j << ";";
    out << " }\n";
    for (std::size_t j = 0; j < net.input_dim; ++j)
        out << "  x" << j << " [label=\"x" << j << "\", shape=plaintext];\n";
    for (std::size_t t = 0; t < net.layers.size(); ++t) {
        out << "  { rank=same;";
        for (std::size_t g = 0; g < net.layers[t].width(); ++g)
            out << " L" << t + 2 << "n" << g << ";";
        out << " }\n";
        for (std::size_t g = 0; g < net.layers[t].width(); ++g) {
            const auto& gate = net.layers[t].gates[g];
            out << "  L" << t + 2 << "n" << g << " [label=\">=" << gate.threshold.str()
                << "\"];\n";
            for (std::size_t j = 0; j < gate.weights.size(); ++j) {
                if (gate.weights[j] == 0) continue;
                if (t == 0)
                    out << "  x" << j;
                else
                    out << "  L" << t + 1 << "n" << j;
                out << " -> L" << t + 2 << "n" << g << " [label=\""
                    << gate.weights[j].str() << "\"];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace btn
