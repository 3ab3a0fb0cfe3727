#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "btn/bigint.hpp"
#include "btn/bitvec.hpp"
#include "btn/errors.hpp"
#include "btn/network.hpp"

namespace btn {

/// The pair-incidence family: n = 2^d vectors of dimension N = C(n,2), one
/// coordinate per unordered pair (i,j), i < j, in lexicographic order;
/// vector k has a 1 exactly at the pairs containing k (n-1 ones each).
/// Encodable to d bits by a two-layer network, but provably not decodable
/// back by any two-layer network.
struct hard_instance {
    std::size_t d = 0;
    std::size_t n = 0;
    std::size_t coords = 0;  // N = C(n,2)
    std::vector<bit_vector> vectors;

    std::size_t coord_index(std::size_t i, std::size_t j) const {
        if (i >= j || j >= n) throw range_error("pair index out of range");
        // pairs (0,1),(0,2),...,(0,n-1),(1,2),... : offset of block i, then j.
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    }

    std::pair<std::size_t, std::size_t> coord_pair(std::size_t flat) const {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t block = n - 1 - i;
            if (flat < block) return {i, i + 1 + flat};
            flat -= block;
        }
        throw range_error("flat coordinate out of range");
    }

    dataset as_dataset() const { return dataset::of(vectors); }
};

inline hard_instance make_hard_instance(std::size_t d) {
    if (d < 2) throw range_error("hard instance needs d >= 2");
    if (d > 6) throw range_error("hard instance limited to d <= 6 at desk scale");
    hard_instance inst;
    inst.d = d;
    inst.n = std::size_t{1} << d;
    inst.coords = inst.n * (inst.n - 1) / 2;
    inst.vectors.reserve(inst.n);
    for (std::size_t k = 0; k < inst.n; ++k) {
        std::vector<std::uint8_t> bits(inst.coords, 0);
        for (std::size_t other = 0; other < inst.n; ++other) {
            if (other == k) continue;
            bits[inst.coord_index(std::min(k, other), std::max(k, other))] = 1;
        }
        inst.vectors.push_back(bit_vector(std::move(bits)));
    }
    return inst;
}

/// Two-layer encoder mapping vector k of the family to binary(k), most
/// significant bit first. Each bit gate sums n/4 pair coordinates with
/// threshold 1: bits above the lowest read even pairs (2q, 2q+1) -- which
/// fire exactly when floor(k/2) = q -- over the blocks where the selected
/// bit of q is 1; the lowest bit reads the odd pairs (4i+1, 4i+3), which
/// cover exactly the odd k.
inline layered_network build_hard_encoder(const hard_instance& inst) {
    layered_network net;
    net.input_dim = inst.coords;
    layer out;
    out.gates.reserve(inst.d);
    for (std::size_t t = inst.d; t-- > 0;) {  // t = bit significance, MSB first
        threshold_gate g;
        g.weights.assign(inst.coords, 0);
        if (t == 0) {
            for (std::size_t i = 0; 4 * i + 3 < inst.n; ++i)
                g.weights[inst.coord_index(4 * i + 1, 4 * i + 3)] = 1;
        } else {
            for (std::size_t q = 0; q < inst.n / 2; ++q)
                if ((q >> (t - 1)) & 1u)
                    g.weights[inst.coord_index(2 * q, 2 * q + 1)] = 1;
        }
        g.threshold = 1;
        out.gates.push_back(std::move(g));
    }
    net.layers.push_back(std::move(out));
    net.middle_index = net.layer_count();
    return net;
}

/// Integer separator: w . p >= theta on every positive point and
/// w . q <= theta - 1 on every negative one.
struct separator {
    std::vector<bigint> weights;
    bigint threshold;
};

/// Nonnegative rational combination of the margin constraints that sums to
/// the contradiction 0 >= 1. Multipliers are indexed over the positive
/// points first (constraint w.p - theta >= 0), then the negative points
/// (constraint theta - w.q >= 1), in input order.
struct infeasibility_certificate {
    std::vector<bigrat> multipliers;
};

struct separability_witness {
    bool separable = false;
    std::optional<separator> sep;
    std::optional<infeasibility_certificate> certificate;
};

namespace detail {

struct fm_row {
    std::vector<bigrat> coeff;  // over (w_0..w_{dim-1}, theta)
    bigrat rhs;                 // coeff . v >= rhs
    std::vector<bigrat> mult;   // provenance over the original constraints
};

// Scale so coefficients are coprime integers; comparable rows then dedupe by
// keeping the largest right-hand side (the binding one).
inline void fm_normalize(fm_row& row) {
    bigint lcm_den = 1;
    for (const auto& c : row.coeff)
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
    bigint gcd_num = 0;
    for (const auto& c : row.coeff)
        gcd_num = boost::multiprecision::gcd(gcd_num,
                                             numerator(c) * (lcm_den / denominator(c)));
    if (gcd_num == 0) return;  // all-zero coefficients; keep as-is
    const bigrat scale = bigrat(lcm_den, gcd_num);
    for (auto& c : row.coeff) c *= scale;
    row.rhs *= scale;
    for (auto& m : row.mult) m *= scale;
}

/// The margin constraint matrix for the separation problem, in the
/// certificate's constraint order.
inline std::vector<fm_row> separation_constraints(const std::vector<bit_vector>& pos,
                                                  const std::vector<bit_vector>& neg,
                                                  std::size_t dim) {
    std::vector<fm_row> rows;
    const std::size_t total = pos.size() + neg.size();
    std::size_t index = 0;
    for (const auto& p : pos) {
        fm_row row;
        row.coeff.assign(dim + 1, 0);
        for (std::size_t j = 0; j < dim; ++j) row.coeff[j] = int(p[j]);
        row.coeff[dim] = -1;
        row.rhs = 0;
        row.mult.assign(total, 0);
        row.mult[index++] = 1;
        rows.push_back(std::move(row));
    }
    for (const auto& q : neg) {
        fm_row row;
        row.coeff.assign(dim + 1, 0);
        for (std::size_t j = 0; j < dim; ++j) row.coeff[j] = -int(q[j]);
        row.coeff[dim] = 1;
        row.rhs = 1;
        row.mult.assign(total, 0);
        row.mult[index++] = 1;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

/// Decides, by exact-rational Fourier-Motzkin elimination, whether an
/// integer threshold function separates `pos` from `neg` (strictness encoded
/// as a unit margin, which is lossless for integer parameters). Returns
/// either an integer separator or an infeasibility certificate; both
/// re-verify independently in exact arithmetic.
inline separability_witness check_linearly_separable(
    const std::vector<bit_vector>& pos, const std::vector<bit_vector>& neg,
    std::size_t dim) {
    if (pos.empty() || neg.empty())
        throw input_error("both point sets must be nonempty");
    if (dim > 12) throw resource_error("separability check limited to dimension 12");
    for (const auto& v : pos)
        if (v.size() != dim) throw dimension_error("point width mismatch");
    for (const auto& v : neg)
        if (v.size() != dim) throw dimension_error("point width mismatch");
    {
        std::set<bit_vector> p(pos.begin(), pos.end());
        for (const auto& q : neg)
            if (p.count(q)) throw input_error("point " + q.to_string() +
                                              " appears on both sides");
    }

    const std::size_t nvars = dim + 1;
    constexpr std::size_t max_rows = 200000;

    std::vector<detail::fm_row> rows = detail::separation_constraints(pos, neg, dim);
    // rows before eliminating variable e, for back-substitution
    std::vector<std::vector<detail::fm_row>> stages;

    auto scan_trivial =
        [&](std::vector<detail::fm_row>& rs) -> std::optional<infeasibility_certificate> {
        std::vector<detail::fm_row> kept;
        for (auto& row : rs) {
            const bool all_zero =
                std::all_of(row.coeff.begin(), row.coeff.end(),
                            [](const bigrat& c) { return c == 0; });
            if (all_zero) {
                if (row.rhs > 0) {
                    infeasibility_certificate cert;
                    cert.multipliers = row.mult;
                    for (auto& m : cert.multipliers) m /= row.rhs;  // scale to 0 >= 1
                    return cert;
                }
                continue;  // vacuous
            }
            kept.push_back(std::move(row));
        }
        rs = std::move(kept);
        return std::nullopt;
    };

    for (std::size_t e = 0; e < nvars; ++e) {
        if (auto cert = scan_trivial(rows))
            return {false, std::nullopt, std::move(cert)};
        stages.push_back(rows);

        std::vector<detail::fm_row> lower, upper, rest;
        for (auto& row : rows) {
            if (row.coeff[e] > 0)
                lower.push_back(std::move(row));
            else if (row.coeff[e] < 0)
                upper.push_back(std::move(row));
            else
                rest.push_back(std::move(row));
        }

        std::vector<detail::fm_row> next = std::move(rest);
        std::map<std::vector<bigrat>, std::size_t> seen;  // coeffs -> index in next
        for (std::size_t i = 0; i < next.size(); ++i) seen[next[i].coeff] = i;

        for (const auto& lo : lower) {
            for (const auto& up : upper) {
                const bigrat a = -up.coeff[e];  // > 0
                const bigrat b = lo.coeff[e];   // > 0
                detail::fm_row row;
                row.coeff.resize(nvars);
                for (std::size_t k = 0; k < nvars; ++k)
                    row.coeff[k] = a * lo.coeff[k] + b * up.coeff[k];
                row.rhs = a * lo.rhs + b * up.rhs;
                row.mult.resize(lo.mult.size());
                for (std::size_t k = 0; k < row.mult.size(); ++k)
                    row.mult[k] = a * lo.mult[k] + b * up.mult[k];
                detail::fm_normalize(row);

                auto it = seen.find(row.coeff);
                if (it != seen.end()) {
                    if (row.rhs > next[it->second].rhs) next[it->second] = std::move(row);
                } else {
                    seen[row.coeff] = next.size();
                    next.push_back(std::move(row));
                }
                if (next.size() > max_rows)
                    throw resource_error("elimination blow-up past " +
                                         std::to_string(max_rows) + " rows");
            }
        }
        rows = std::move(next);
    }

    if (auto cert = scan_trivial(rows))
        return {false, std::nullopt, std::move(cert)};

    // Feasible: back-substitute a rational point, eliminated variables in
    // reverse order, then clear denominators.
    std::vector<bigrat> value(nvars, 0);
    for (std::size_t e = nvars; e-- > 0;) {
        std::optional<bigrat> low, high;
        for (const auto& row : stages[e]) {
            if (row.coeff[e] == 0) continue;
            bigrat rest = row.rhs;
            for (std::size_t k = e + 1; k < nvars; ++k)
                rest -= row.coeff[k] * value[k];
            const bigrat bound = rest / row.coeff[e];
            if (row.coeff[e] > 0) {
                if (!low || bound > *low) low = bound;
            } else {
                if (!high || bound < *high) high = bound;
            }
        }
        if (low && high)
            value[e] = (*low + *high) / 2;
        else if (low)
            value[e] = *low;
        else if (high)
            value[e] = *high;
    }

    bigint lcm_den = 1;
    for (const auto& v : value)
        lcm_den = boost::multiprecision::lcm(lcm_den, denominator(v));
    separator sep;
    sep.weights.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j)
        sep.weights.push_back(numerator(value[j]) * (lcm_den / denominator(value[j])));
    sep.threshold = numerator(value[dim]) * (lcm_den / denominator(value[dim]));

    // The scaled point must satisfy the margin system it came from.
    for (const auto& p : pos)
        if (eval_gate({sep.weights, sep.threshold}, p) != 1)
            throw state_error("internal: separator fails a positive point");
    for (const auto& q : neg)
        if (eval_gate({sep.weights, sep.threshold}, q) != 0)
            throw state_error("internal: separator fails a negative point");

    return {true, std::move(sep), std::nullopt};
}

/// Recomputes the certificate combination from scratch: multipliers must be
/// nonnegative, cancel every variable, and sum the right-hand sides to >= 1.
inline bool verify_infeasibility_certificate(const infeasibility_certificate& cert,
                                             const std::vector<bit_vector>& pos,
                                             const std::vector<bit_vector>& neg,
                                             std::size_t dim) {
    const auto rows = detail::separation_constraints(pos, neg, dim);
    if (cert.multipliers.size() != rows.size()) return false;
    for (const auto& m : cert.multipliers)
        if (m < 0) return false;
    std::vector<bigrat> combo(dim + 1, 0);
    bigrat rhs = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t k = 0; k <= dim; ++k)
            combo[k] += cert.multipliers[i] * rows[i].coeff[k];
        rhs += cert.multipliers[i] * rows[i].rhs;
    }
    for (const auto& c : combo)
        if (c != 0) return false;
    return rhs >= 1;
}

/// The decoding obstruction for a hard instance: any two-layer decoder
/// sending 0^d and 1^d to two family members would need one output gate to
/// separate {0^d, 1^d} from the rest of the cube, so that split's
/// infeasibility certifies non-decodability. The choice of image pair only
/// permutes coordinates, so one split covers all assignments.
struct hardness_certificate {
    std::size_t d = 0;
    std::vector<bit_vector> pos;  // {0^d, 1^d}
    std::vector<bit_vector> neg;  // remaining cube points
    separability_witness witness;
    bool obstruction_confirmed = false;
};

inline hardness_certificate certify_no_two_layer_decoder(const hard_instance& inst) {
    if (inst.d > 4)
        throw range_error("certification limited to d <= 4 (elimination budget)");
    hardness_certificate cert;
    cert.d = inst.d;
    cert.pos = {bit_vector::zeros(inst.d), bit_vector::ones(inst.d)};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.d); ++mask) {
        std::vector<std::uint8_t> bits(inst.d);
        for (std::size_t j = 0; j < inst.d; ++j)
            bits[j] = static_cast<std::uint8_t>((mask >> j) & 1u);
        bit_vector v(std::move(bits));
        if (v != cert.pos[0] && v != cert.pos[1]) cert.neg.push_back(std::move(v));
    }
    cert.witness = check_linearly_separable(cert.pos, cert.neg, inst.d);
    cert.obstruction_confirmed =
        !cert.witness.separable && cert.witness.certificate &&
        verify_infeasibility_certificate(*cert.witness.certificate, cert.pos,
                                         cert.neg, inst.d);
    return cert;
}

}  // namespace btn
