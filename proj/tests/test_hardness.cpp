#include <algorithm>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "btn/hardness.hpp"
#include "btn/verify.hpp"

using namespace btn;

namespace {

bit_vector bv(const std::string& s) { return bit_vector::from_string(s); }

std::vector<bit_vector> cube(std::size_t d) {
    std::vector<bit_vector> points;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        std::vector<std::uint8_t> bits(d);
        for (std::size_t j = 0; j < d; ++j)
            bits[j] = static_cast<std::uint8_t>((mask >> j) & 1u);
        points.push_back(bit_vector(std::move(bits)));
    }
    return points;
}

// Split the cube by an integer threshold function.
std::pair<std::vector<bit_vector>, std::vector<bit_vector>> split_by(
    const std::vector<bigint>& w, const bigint& theta, std::size_t d) {
    std::vector<bit_vector> pos, neg;
    for (auto& p : cube(d)) {
        if (eval_gate({w, theta}, p))
            pos.push_back(std::move(p));
        else
            neg.push_back(std::move(p));
    }
    return {pos, neg};
}

}  // namespace

TEST_CASE("pair-incidence instance shape") {
    const hard_instance inst3 = make_hard_instance(3);
    CHECK(inst3.n == 8);
    CHECK(inst3.coords == 28);

    const hard_instance inst2 = make_hard_instance(2);
    CHECK(inst2.n == 4);
    CHECK(inst2.coords == 6);
    // y^0 has ones exactly at (0,1), (0,2), (0,3)
    CHECK(inst2.vectors[0] == bv("111000"));

    CHECK_THROWS_AS(make_hard_instance(1), range_error);
    CHECK_THROWS_AS(make_hard_instance(7), range_error);
}

TEST_CASE("pair-incidence vectors are distinct with n-1 ones each") {
    for (std::size_t d = 2; d <= 5; ++d) {
        const hard_instance inst = make_hard_instance(d);
        std::set<bit_vector> seen;
        for (const auto& y : inst.vectors) {
            REQUIRE(y.count_ones() == inst.n - 1);
            REQUIRE(seen.insert(y).second);
        }
        // coordinate (i,j) is set exactly on vectors i and j
        for (std::size_t i = 0; i < inst.n; ++i)
            for (std::size_t j = i + 1; j < inst.n; ++j) {
                const std::size_t c = inst.coord_index(i, j);
                for (std::size_t k = 0; k < inst.n; ++k)
                    REQUIRE(inst.vectors[k][c] == (k == i || k == j ? 1 : 0));
            }
    }
}

TEST_CASE("coordinate index maps round-trip") {
    const hard_instance inst = make_hard_instance(3);
    for (std::size_t flat = 0; flat < inst.coords; ++flat) {
        auto [i, j] = inst.coord_pair(flat);
        REQUIRE(inst.coord_index(i, j) == flat);
    }
}

TEST_CASE("hard-instance encoder reproduces the worked d=3 codes") {
    const hard_instance inst = make_hard_instance(3);
    const layered_network enc = build_hard_encoder(inst);
    CHECK(compute_stats(enc).widths == std::vector<std::size_t>{28, 3});
    CHECK(eval_network(enc, inst.vectors[7]).back() == bv("111"));
    CHECK(eval_network(enc, inst.vectors[1]).back() == bv("001"));
}

TEST_CASE("hard-instance encoder maps y^k to binary(k) for d=2..5") {
    for (std::size_t d = 2; d <= 5; ++d) {
        const hard_instance inst = make_hard_instance(d);
        const layered_network enc = build_hard_encoder(inst);
        for (std::size_t k = 0; k < inst.n; ++k)
            REQUIRE(eval_network(enc, inst.vectors[k]).back() ==
                    binary_code(k, d));
        REQUIRE(is_perfect_encoder(enc, inst.as_dataset()).ok);
    }
}

TEST_CASE("XOR is not linearly separable") {
    const auto w = check_linearly_separable({bv("00"), bv("11")},
                                            {bv("01"), bv("10")}, 2);
    REQUIRE_FALSE(w.separable);
    REQUIRE(w.certificate.has_value());
    CHECK(verify_infeasibility_certificate(*w.certificate, {bv("00"), bv("11")},
                                           {bv("01"), bv("10")}, 2));
}

TEST_CASE("AND corner is separable with a valid witness") {
    std::vector<bit_vector> neg;
    for (auto& p : cube(3))
        if (p != bv("111")) neg.push_back(std::move(p));
    const auto w = check_linearly_separable({bv("111")}, neg, 3);
    REQUIRE(w.separable);
    REQUIRE(w.sep.has_value());
    CHECK(eval_gate({w.sep->weights, w.sep->threshold}, bv("111")) == 1);
    for (const auto& q : neg)
        CHECK(eval_gate({w.sep->weights, w.sep->threshold}, q) == 0);
    // the textbook witness also checks out
    CHECK(eval_gate({{1, 1, 1}, 3}, bv("111")) == 1);
}

TEST_CASE("corner pair {all-zeros, all-ones} vs rest is never separable") {
    for (std::size_t d = 2; d <= 4; ++d) {
        std::vector<bit_vector> pos = {bit_vector::zeros(d), bit_vector::ones(d)};
        std::vector<bit_vector> neg;
        for (auto& p : cube(d))
            if (p != pos[0] && p != pos[1]) neg.push_back(std::move(p));
        const auto w = check_linearly_separable(pos, neg, d);
        REQUIRE_FALSE(w.separable);
        REQUIRE(w.certificate.has_value());
        REQUIRE(verify_infeasibility_certificate(*w.certificate, pos, neg, d));
    }
}

TEST_CASE("separability checker input validation") {
    CHECK_THROWS_AS(check_linearly_separable({bv("01")}, {bv("01")}, 2),
                    input_error);
    CHECK_THROWS_AS(check_linearly_separable({}, {bv("01")}, 2), input_error);
    CHECK_THROWS_AS(
        check_linearly_separable({bit_vector::zeros(13)}, {bit_vector::ones(13)}, 13),
        resource_error);
}

TEST_CASE("separability verdict is symmetric under side swap") {
    rng_engine g = seeded_engine(12);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t d = 2 + rand_below(g, 3);
        // random split of the cube into nonempty halves
        std::vector<bit_vector> pos, neg;
        while (pos.empty() || neg.empty()) {
            pos.clear();
            neg.clear();
            for (auto& p : cube(d)) {
                if (rand_bit(g))
                    pos.push_back(std::move(p));
                else
                    neg.push_back(std::move(p));
            }
        }
        const auto forward = check_linearly_separable(pos, neg, d);
        const auto backward = check_linearly_separable(neg, pos, d);
        REQUIRE(forward.separable == backward.separable);

        if (forward.separable) {
            // negating a forward witness solves the swapped problem
            std::vector<bigint> neg_w;
            for (const auto& c : forward.sep->weights) neg_w.push_back(-c);
            const bigint neg_theta = 1 - forward.sep->threshold;
            for (const auto& q : neg)
                REQUIRE(eval_gate({neg_w, neg_theta}, q) == 1);
            for (const auto& p : pos)
                REQUIRE(eval_gate({neg_w, neg_theta}, p) == 0);
        }
    }
}

TEST_CASE("separability verdict is invariant under coordinate permutation") {
    rng_engine g = seeded_engine(13);
    const std::size_t d = 3;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<bit_vector> pos, neg;
        while (pos.empty() || neg.empty()) {
            pos.clear();
            neg.clear();
            for (auto& p : cube(d)) {
                if (rand_bit(g))
                    pos.push_back(std::move(p));
                else
                    neg.push_back(std::move(p));
            }
        }
        std::vector<std::size_t> perm = {0, 1, 2};
        for (std::size_t i = 0; i < d; ++i)
            std::swap(perm[i], perm[i + rand_below(g, d - i)]);
        auto apply = [&](const bit_vector& v) {
            std::vector<std::uint8_t> bits(d);
            for (std::size_t j = 0; j < d; ++j) bits[j] = v[perm[j]];
            return bit_vector(std::move(bits));
        };
        std::vector<bit_vector> ppos, pneg;
        for (const auto& p : pos) ppos.push_back(apply(p));
        for (const auto& q : neg) pneg.push_back(apply(q));
        REQUIRE(check_linearly_separable(pos, neg, d).separable ==
                check_linearly_separable(ppos, pneg, d).separable);
    }
}

TEST_CASE("threshold-generated splits are recognized with valid witnesses") {
    rng_engine g = seeded_engine(14);
    for (std::size_t d = 2; d <= 4; ++d) {
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<bigint> w(d);
            for (auto& c : w) c = rand_in(g, -4, 4);
            const bigint theta = rand_in(g, -3, 4);
            auto [pos, neg] = split_by(w, theta, d);
            if (pos.empty() || neg.empty()) continue;
            const auto witness = check_linearly_separable(pos, neg, d);
            REQUIRE(witness.separable);
            for (const auto& p : pos)
                REQUIRE(eval_gate({witness.sep->weights, witness.sep->threshold},
                                  p) == 1);
            for (const auto& q : neg)
                REQUIRE(eval_gate({witness.sep->weights, witness.sep->threshold},
                                  q) == 0);
        }
    }
}

TEST_CASE("decoding obstruction certificate for small instances") {
    for (std::size_t d = 2; d <= 4; ++d) {
        const hardness_certificate cert =
            certify_no_two_layer_decoder(make_hard_instance(d));
        REQUIRE(cert.obstruction_confirmed);
        REQUIRE_FALSE(cert.witness.separable);
        CHECK(cert.pos.size() == 2);
        CHECK(cert.neg.size() == (std::size_t{1} << d) - 2);
    }
    CHECK_THROWS_AS(certify_no_two_layer_decoder(make_hard_instance(5)),
                    range_error);
}
