#pragma once

#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "btn/autoencoders.hpp"
#include "btn/bitvec.hpp"
#include "btn/encoders.hpp"
#include "btn/errors.hpp"
#include "btn/hardness.hpp"
#include "btn/network.hpp"
#include "btn/probabilistic.hpp"
#include "btn/separation.hpp"
#include "btn/serialize.hpp"
#include "btn/verify.hpp"

// Command implementations behind the btn CLI. Each run_* function does the
// whole job of one subcommand and returns the process exit code:
//   0  success / property verified
//   1  property violation (verification failed, search exhausted)
//   2  usage, parse, or range errors
// Keeping them here (not in the binary) lets the test suite drive the exact
// command surface in-process.

namespace btn::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

namespace detail {

inline std::string widths_str(const std::vector<std::size_t>& widths) {
    std::string s = "[";
    for (std::size_t i = 0; i < widths.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(widths[i]);
    }
    return s + "]";
}

inline std::string perm_str(const std::vector<std::size_t>& perm) {
    std::string s;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(perm[i]);
    }
    return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

struct gen_options {
    std::size_t n = 0;
    std::size_t dim = 0;
    std::string density = "dense";  // "dense" or a ones-count integer
    std::uint64_t seed = 0;
    std::string out;
};

inline int run_gen(const gen_options& opt, std::ostream& out, std::ostream& err) {
    try {
        dataset data;
        std::string density_note;
        if (opt.density == "dense") {
            data = random_dataset(opt.n, opt.dim, opt.seed);
            density_note = "dense";
        } else {
            std::size_t ones = 0;
            try {
                ones = static_cast<std::size_t>(std::stoull(opt.density));
            } catch (...) {
                throw input_error("density must be \"dense\" or a ones count");
            }
            data = random_dataset_with_ones(opt.n, opt.dim, ones, opt.seed);
            density_note = "ones=" + std::to_string(ones);
        }
        std::vector<std::string> comments = {
            "n=" + std::to_string(opt.n) + " D=" + std::to_string(opt.dim) +
            " density=" + density_note + " seed=" + std::to_string(opt.seed)};
        write_file(opt.out, serialize_dataset(data, comments));
        out << "wrote " << data.size() << " vectors of dimension " << data.dim
            << " to " << opt.out << " (seed " << opt.seed << ")\n";
        return exit_ok;
    } catch (const error& e) {
        err << "gen: " << e.what() << "\n";
        return exit_usage;
    }
}

// ---------------------------------------------------------------------------
// build
// ---------------------------------------------------------------------------

struct build_options {
    std::string construction;          // step-enc | sqrt-enc | log-enc3 | log-enc4 |
                                       // auto3 | auto5-sqrt | auto5-log | auto7 |
                                       // rand-sign | parity | hard-enc
    std::string dataset_path;          // required except hard-enc
    std::optional<std::size_t> d;      // hard-enc instance parameter
    std::optional<std::uint64_t> seed; // required for rand-sign / parity
    std::size_t max_attempts = 50;
    std::string out;
};

namespace detail {

struct built {
    layered_network net;
    std::optional<std::vector<std::size_t>> perm;
    std::optional<std::size_t> attempts;
};

inline built dispatch_build(const build_options& opt, const dataset* data) {
    const std::string& c = opt.construction;
    if (c == "hard-enc") {
        if (!opt.d) throw input_error("hard-enc needs --d");
        return {build_hard_encoder(make_hard_instance(*opt.d)), std::nullopt,
                std::nullopt};
    }
    if (!data) throw input_error(c + " needs --dataset");
    if (c == "rand-sign") {
        if (!opt.seed) throw input_error("rand-sign needs --seed");
        auto r = build_random_sign_encoder(*data, *opt.seed, opt.max_attempts);
        return {std::move(r.net), std::nullopt, r.attempts};
    }
    if (c == "parity") {
        if (!opt.seed) throw input_error("parity needs --seed");
        auto r = build_parity_encoder(*data, *opt.seed, opt.max_attempts);
        return {parity_to_threshold(r.spec), std::nullopt, r.attempts};
    }

    separating_key key = make_key(*data);
    built b;
    b.perm = key.perm;
    if (c == "step-enc") {
        b.net = build_step_encoder(key);
    } else if (c == "log-enc3") {
        b.net = build_binary_index_encoder(key);
    } else if (c == "sqrt-enc") {
        b.net = build_sqrt_encoder(key, sqrt_decomposition::from(key));
    } else if (c == "log-enc4") {
        b.net = build_log_encoder_4layer(key, sqrt_decomposition::from(key));
    } else if (c == "auto3") {
        b.net = build_auto3(*data, key);
    } else if (c == "auto5-sqrt") {
        b.net = build_auto5_sqrt(*data, key, sqrt_decomposition::from(key));
    } else if (c == "auto5-log") {
        b.net = build_auto5_log(*data, key);
    } else if (c == "auto7") {
        b.net = build_auto7(*data, key, sqrt_decomposition::from(key));
    } else {
        throw input_error("unknown construction \"" + c + "\"");
    }
    return b;
}

}  // namespace detail

inline int run_build(const build_options& opt, std::ostream& out, std::ostream& err) {
    try {
        std::optional<dataset> data;
        if (!opt.dataset_path.empty()) data = load_dataset(opt.dataset_path);
        detail::built b =
            detail::dispatch_build(opt, data ? &*data : nullptr);
        write_file(opt.out, serialize_network(b.net));

        const network_stats stats = compute_stats(b.net);
        out << "construction: " << opt.construction << "\n";
        out << "widths: " << detail::widths_str(stats.widths) << "\n";
        out << "middle index: "
            << (stats.middle_index ? std::to_string(*stats.middle_index) : "none")
            << "\n";
        out << "gates: " << stats.gate_count << "\n";
        out << "max |weight|: " << stats.max_abs_weight.str() << "\n";
        out << "max |threshold|: " << stats.max_abs_threshold.str() << "\n";
        if (b.perm) out << "sorted order (code i belongs to input row perm[i]): "
                        << detail::perm_str(*b.perm) << "\n";
        if (opt.seed) out << "seed: " << *opt.seed << "\n";
        if (b.attempts) out << "attempts: " << *b.attempts << "\n";
        out << "wrote network to " << opt.out << "\n";
        return exit_ok;
    } catch (const search_exhausted& e) {
        err << "build: " << e.what() << "\n";
        return exit_violation;
    } catch (const error& e) {
        err << "build: " << e.what() << "\n";
        return exit_usage;
    }
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct verify_options {
    std::string network_path;
    std::string dataset_path;
};

inline int run_verify(const verify_options& opt, std::ostream& out,
                      std::ostream& err) {
    layered_network net;
    dataset data;
    try {
        net = load_network(opt.network_path);
        data = load_dataset(opt.dataset_path);
    } catch (const error& e) {
        err << "verify: " << e.what() << "\n";
        return exit_usage;
    }
    try {
        const bool as_autoencoder =
            net.middle_index && *net.middle_index < net.layer_count();

        // Middle-layer code table (final layer codes for pure encoders).
        const std::size_t code_pos =
            net.middle_position() ? *net.middle_position() : net.layers.size();
        out << "row  input -> code -> output\n";
        for (std::size_t i = 0; i < data.size(); ++i) {
            auto trace = eval_network(net, data.vectors[i]);
            out << std::setw(3) << i << "  " << data.vectors[i].to_string() << " -> "
                << trace[code_pos].to_string() << " -> " << trace.back().to_string()
                << "\n";
        }

        if (as_autoencoder) {
            auto check = is_perfect_autoencoder(net, data);
            if (check.passed()) {
                out << "perfect autoencoder: yes (all " << data.size()
                    << " vectors reconstructed; middle codes distinct)\n";
                return exit_ok;
            }
            if (!check.ok && check.failure) {
                out << "mismatch at row " << check.failure->index << ": got "
                    << check.failure->got.to_string() << ", expected "
                    << data.vectors[check.failure->index].to_string() << "\n";
            }
            if (!check.middle_ok && check.middle_failure) {
                out << "middle-layer collision between rows "
                    << check.middle_failure->first << " and "
                    << check.middle_failure->second << " (code "
                    << check.middle_failure->code.to_string() << ")\n";
            }
            return exit_violation;
        }

        auto check = is_perfect_encoder(net, data);
        if (check.ok) {
            out << "perfect encoder: yes (all " << data.size() << " codes distinct)\n";
            return exit_ok;
        }
        out << "collision between rows " << check.failure->first << " and "
            << check.failure->second << " (code " << check.failure->code.to_string()
            << ")\n";
        return exit_violation;
    } catch (const error& e) {
        err << "verify: " << e.what() << "\n";
        return exit_usage;
    }
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

struct table_options {
    std::string dataset_path;
    std::uint64_t seed = 0;
    std::size_t max_attempts = 50;
};

struct table_row {
    std::string name;
    std::string formula;
    std::string realized;       // widths, or a note for non-network rows
    std::size_t code_width = 0; // achieved middle/output dimension
    std::string status;         // "ok", "FAILED", "skipped (...)"
    std::optional<std::size_t> attempts;
};

/// Builds every applicable construction for the dataset, verifies each one
/// exhaustively, and reports one row per construction. Rows that cannot be
/// built (n = 1 for the randomized encoders) are marked skipped; rows whose
/// verification fails are marked FAILED.
inline std::vector<table_row> build_table(const dataset& data, std::uint64_t seed,
                                          std::size_t max_attempts = 50) {
    const std::size_t n = data.size();
    const std::size_t D = data.dim;
    std::vector<table_row> rows;

    auto widths_of = [](const layered_network& net) {
        return detail::widths_str(compute_stats(net).widths);
    };
    auto encoder_row = [&](std::string name, std::string formula,
                           const layered_network& net) {
        table_row row{std::move(name), std::move(formula), widths_of(net),
                      net.output_dim(),
                      is_perfect_encoder(net, data).ok ? "ok" : "FAILED",
                      std::nullopt};
        rows.push_back(std::move(row));
    };
    auto auto_row = [&](std::string name, std::string formula,
                        const layered_network& net) {
        table_row row{std::move(name), std::move(formula), widths_of(net),
                      net.width_at(*net.middle_index),
                      is_perfect_autoencoder(net, data).passed() ? "ok" : "FAILED",
                      std::nullopt};
        rows.push_back(std::move(row));
    };

    {  // reference codec
        lookup_codec codec(data);
        const bool ok = is_perfect_autoencoder(codec, data).passed();
        rows.push_back({"lookup", "D/d/D (index tables), d=ceil(log n)",
                        "table(n=" + std::to_string(n) + ")", codec.code_width(),
                        ok ? "ok" : "FAILED", std::nullopt});
    }

    if (n >= 2) {
        try {
            auto r = build_random_sign_encoder(data, seed, max_attempts);
            table_row row{"rand-sign", "D/d, d=ceil(8*sqrt(2M)*ln n)",
                          widths_of(r.net), r.net.output_dim(),
                          is_perfect_encoder(r.net, data).ok ? "ok" : "FAILED",
                          r.attempts};
            rows.push_back(std::move(row));
        } catch (const search_exhausted&) {
            rows.push_back({"rand-sign", "D/d, d=ceil(8*sqrt(2M)*ln n)", "-", 0,
                            "FAILED (search exhausted)", max_attempts});
        }
        try {
            auto r = build_parity_encoder(data, seed, max_attempts);
            std::set<bit_vector> codes;
            for (const auto& x : data.vectors) codes.insert(eval_parity_code(r.spec, x));
            rows.push_back({"parity", "D/d (parity functions), d=2*ceil(log n)",
                            "subsets over D=" + std::to_string(D), r.spec.width(),
                            codes.size() == n ? "ok" : "FAILED", r.attempts});

            layered_network gadget = parity_to_threshold(r.spec);
            std::size_t padded = r.spec.width() * D;  // one full block per output
            table_row row{"parity-btn",
                          "D/H/d, H=sum|S_k| (padded bound d*D=" +
                              std::to_string(padded) + ")",
                          widths_of(gadget), gadget.output_dim(),
                          is_perfect_encoder(gadget, data).ok ? "ok" : "FAILED",
                          r.attempts};
            rows.push_back(std::move(row));
        } catch (const search_exhausted&) {
            rows.push_back({"parity", "D/d (parity functions), d=2*ceil(log n)", "-",
                            0, "FAILED (search exhausted)", max_attempts});
        }
    } else {
        rows.push_back({"rand-sign", "D/d, d=ceil(8*sqrt(2M)*ln n)", "-", 0,
                        "skipped (n < 2)", std::nullopt});
        rows.push_back({"parity", "D/d (parity functions), d=2*ceil(log n)", "-", 0,
                        "skipped (n < 2)", std::nullopt});
    }

    const separating_key key = make_key(data);
    const sqrt_decomposition dec = sqrt_decomposition::from(key);

    encoder_row("step-enc", "D/n", build_step_encoder(key));
    encoder_row("sqrt-enc", "D/(r+D)/2r, r=ceil(sqrt n)", build_sqrt_encoder(key, dec));
    encoder_row("log-enc3", "D/n/ceil(log n)", build_binary_index_encoder(key));
    encoder_row("log-enc4", "D/(r+D)/2r/2*ceil(log r)",
                build_log_encoder_4layer(key, dec));
    auto_row("auto3", "D/n/D", build_auto3(data, key));
    auto_row("auto5-sqrt", "D/(r+D)/2r/rD/D", build_auto5_sqrt(data, key, dec));
    auto_row("auto5-log", "D/n/ceil(log n)/n/D", build_auto5_log(data, key));
    auto_row("auto7", "D/(r+D)/2r/2*ceil(log r)/2r/rD/D",
             build_auto7(data, key, dec));
    return rows;
}

inline int run_table(const table_options& opt, std::ostream& out, std::ostream& err) {
    dataset data;
    try {
        data = load_dataset(opt.dataset_path);
    } catch (const error& e) {
        err << "table: " << e.what() << "\n";
        return exit_usage;
    }
    try {
        const std::size_t n = data.size();
        const std::size_t D = data.dim;
        out << "dataset: n=" << n << " D=" << D;
        if (n >= 2)
            out << " M=" << compute_sparsity(data).max_shared_ones;
        out << " seed=" << opt.seed << "\n\n";

        auto rows = build_table(data, opt.seed, opt.max_attempts);
        out << std::left << std::setw(13) << "construction" << std::setw(44)
            << "architecture" << std::setw(28) << "realized" << std::setw(6) << "d"
            << std::setw(10) << "status" << "attempts\n";
        bool all_ok = true;
        for (const auto& row : rows) {
            out << std::left << std::setw(13) << row.name << std::setw(44)
                << row.formula << std::setw(28) << row.realized << std::setw(6)
                << row.code_width << std::setw(10) << row.status;
            if (row.attempts) out << *row.attempts;
            out << "\n";
            if (row.status.rfind("FAILED", 0) == 0) all_ok = false;
        }

        // Hidden-node accounting for the seven-layer autoencoder: the layer
        // widths around the middle sum to (D+5)r + D exactly.
        std::size_t r = 0;
        while (r * r < n) ++r;
        const std::size_t realized_hidden = (r + D) + 2 * r + 2 * r + r * D;
        out << "\nauto7 hidden nodes excluding middle: " << realized_hidden
            << " realized, (D+5)*r+D = " << (D + 5) * r + D << "\n";
        return all_ok ? exit_ok : exit_violation;
    } catch (const error& e) {
        err << "table: " << e.what() << "\n";
        return exit_usage;
    }
}

// ---------------------------------------------------------------------------
// hardness
// ---------------------------------------------------------------------------

struct hardness_options {
    std::size_t d = 0;
    std::string out;  // optional: export the instance as a dataset file
};

inline int run_hardness(const hardness_options& opt, std::ostream& out,
                        std::ostream& err) {
    hard_instance inst;
    try {
        inst = make_hard_instance(opt.d);
    } catch (const error& e) {
        err << "hardness: " << e.what() << "\n";
        return exit_usage;
    }
    try {
        out << "pair-incidence family d=" << inst.d << ": n=" << inst.n
            << " vectors, " << inst.coords << " coordinates, " << inst.n - 1
            << " ones each\n";
        if (!opt.out.empty()) {
            write_file(opt.out,
                       serialize_dataset(inst.as_dataset(),
                                         {"pair-incidence family d=" +
                                          std::to_string(inst.d)}));
            out << "wrote instance to " << opt.out << "\n";
        }

        layered_network enc = build_hard_encoder(inst);
        out << "encoder widths: " << detail::widths_str(compute_stats(enc).widths)
            << "\n";
        bool codes_ok = true;
        for (std::size_t k = 0; k < inst.n; ++k) {
            const bit_vector code = eval_network(enc, inst.vectors[k]).back();
            out << "  y^" << k << " -> " << code.to_string() << "\n";
            if (code != binary_code(k, inst.d)) codes_ok = false;
        }
        out << "encoder maps y^k to binary(k): " << (codes_ok ? "yes" : "NO") << "\n";

        if (inst.d > 4) {
            out << "decoding obstruction: certification skipped for d > 4 "
                   "(elimination budget)\n";
            return codes_ok ? exit_ok : exit_violation;
        }

        hardness_certificate cert = certify_no_two_layer_decoder(inst);
        out << "decoding obstruction: separate {" << cert.pos[0].to_string() << ", "
            << cert.pos[1].to_string() << "} from the remaining "
            << cert.neg.size() << " cube points\n";
        if (cert.witness.separable) {
            out << "verdict: SEPARABLE (contradiction; this should never happen)\n";
            return exit_violation;
        }
        out << "verdict: not separable\n";
        out << "certificate multipliers (positive rows, then negative rows):\n  ";
        for (const auto& m : cert.witness.certificate->multipliers)
            out << m << " ";
        out << "\n";
        out << "certificate re-verification (combination cancels all variables, "
               "right-hand sides sum to >= 1): "
            << (cert.obstruction_confirmed ? "OK" : "FAILED") << "\n";
        out << "by symmetry the same obstruction applies to every choice of the "
               "two decoded images, since relabeling the pair only permutes "
               "output coordinates.\n";
        return (codes_ok && cert.obstruction_confirmed) ? exit_ok : exit_violation;
    } catch (const error& e) {
        err << "hardness: " << e.what() << "\n";
        return exit_usage;
    }
}

// ---------------------------------------------------------------------------
// export-dot
// ---------------------------------------------------------------------------

struct export_dot_options {
    std::string network_path;
    std::string out;
};

inline int run_export_dot(const export_dot_options& opt, std::ostream& out,
                          std::ostream& err) {
    try {
        layered_network net = load_network(opt.network_path);
        write_file(opt.out, to_dot(net));
        out << "wrote DOT graph to " << opt.out << "\n";
        return exit_ok;
    } catch (const error& e) {
        err << "export-dot: " << e.what() << "\n";
        return exit_usage;
    }
}

}  // namespace btn::cli
