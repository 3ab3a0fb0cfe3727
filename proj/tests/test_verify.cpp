#include <map>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "btn/autoencoders.hpp"
#include "btn/verify.hpp"

using namespace btn;

namespace {

bit_vector bv(const std::string& s) { return bit_vector::from_string(s); }

dataset example_four() {
    return dataset::of({bv("000"), bv("100"), bv("101"), bv("111")});
}

layered_network identity_network(std::size_t dim) {
    layered_network net;
    net.input_dim = dim;
    layer l;
    for (std::size_t j = 0; j < dim; ++j) {
        threshold_gate g;
        g.weights.assign(dim, 0);
        g.weights[j] = 1;
        g.threshold = 1;
        l.gates.push_back(std::move(g));
    }
    net.layers.push_back(std::move(l));
    net.middle_index = 2;
    return net;
}

// The hand-specified two-bit codec over the worked four-vector set: encode
// bit 0 is x0 XOR x1 (not a threshold function), encode bit 1 is x2.
truth_table_codec worked_codec() {
    std::vector<std::pair<bit_vector, bit_vector>> encode = {
        {bv("000"), bv("00")},
        {bv("100"), bv("10")},
        {bv("101"), bv("11")},
        {bv("111"), bv("01")},
    };
    std::vector<std::pair<bit_vector, bit_vector>> decode = {
        {bv("00"), bv("000")},
        {bv("10"), bv("100")},
        {bv("11"), bv("101")},
        {bv("01"), bv("111")},
    };
    return truth_table_codec(3, 2, encode, decode);
}

}  // namespace

TEST_CASE("perfect encoder accepts injective networks") {
    const dataset data = example_four();
    const layered_network net = build_step_encoder(make_key(data));
    CHECK(is_perfect_encoder(net, data).ok);
}

TEST_CASE("constant network collides on the first pair") {
    const dataset data = example_four();
    layered_network net;
    net.input_dim = 3;
    layer l;
    l.gates.push_back({{1, 1, 1}, 100});  // unreachable threshold
    net.layers.push_back(l);
    const auto check = is_perfect_encoder(net, data);
    REQUIRE_FALSE(check.ok);
    CHECK(check.failure->first == 0);
    CHECK(check.failure->second == 1);
    CHECK(check.failure->code == bv("0"));
    // full traces carried for debugging
    CHECK(check.failure->first_trace.size() == 2);
    CHECK(check.failure->second_trace.size() == 2);
}

TEST_CASE("single-vector dataset is vacuously encoded") {
    const dataset one = dataset::of({bv("01")});
    layered_network net;
    net.input_dim = 2;
    layer l;
    l.gates.push_back({{0, 0}, 5});
    net.layers.push_back(l);
    CHECK(is_perfect_encoder(net, one).ok);
}

TEST_CASE("encoder check rejects dimension mismatch") {
    const dataset data = example_four();
    CHECK_THROWS_AS(is_perfect_encoder(identity_network(2), data),
                    dimension_error);
}

TEST_CASE("identity network autoencodes any dataset") {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const dataset data = random_dataset(8, 6, seed);
        const auto check = is_perfect_autoencoder(identity_network(6), data);
        CHECK(check.passed());
    }
}

TEST_CASE("autoencoder check needs a middle layer") {
    const dataset data = example_four();
    layered_network net = identity_network(3);
    net.middle_index.reset();
    CHECK_THROWS_AS(is_perfect_autoencoder(net, data), state_error);
}

TEST_CASE("perturbing one output threshold is reported as a mismatch") {
    const dataset data = example_four();
    layered_network net = build_auto3(data, make_key(data));
    REQUIRE(is_perfect_autoencoder(net, data).passed());

    net.layers.back().gates[0].threshold += 1;
    const auto check = is_perfect_autoencoder(net, data);
    REQUIRE_FALSE(check.ok);
    REQUIRE(check.failure.has_value());
    const std::size_t i = check.failure->index;
    CHECK(check.failure->got != data.vectors[i]);
    CHECK(check.failure->trace.size() == 3);
}

TEST_CASE("worked truth-table codec passes through the adapter") {
    const dataset data = example_four();
    const truth_table_codec codec = worked_codec();

    // the table rows themselves
    CHECK(codec.encode(bv("000")) == bv("00"));
    CHECK(codec.encode(bv("100")) == bv("10"));
    CHECK(codec.encode(bv("101")) == bv("11"));
    CHECK(codec.encode(bv("111")) == bv("01"));

    const auto check = is_perfect_autoencoder(codec, data);
    CHECK(check.passed());
}

TEST_CASE("whenever reconstruction holds the middle codes are distinct") {
    // Reconstruction forces injectivity through the decoder; the checker
    // asserts it rather than assuming it.
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const dataset data = random_dataset(8, 6, 50 + seed);
        const separating_key key = make_key(data);
        for (const layered_network& net :
             {build_auto3(data, key), build_auto5_log(data, key)}) {
            const auto check = is_perfect_autoencoder(net, data);
            if (check.ok) REQUIRE(check.middle_ok);
        }
    }
}

TEST_CASE("exhaustive equivalence") {
    const std::vector<bit_vector> codes = {bv("01"), bv("10"), bv("11")};
    const layer a = build_gmap_layer(codes);
    const layer b = build_gmap_layer(codes);
    const auto same = exhaustive_equiv(
        [&](const bit_vector& x) { return eval_layer(a, x); },
        [&](const bit_vector& x) { return eval_layer(b, x); }, 3);
    CHECK(same.equivalent);

    threshold_gate g1{{1, 1}, 1};
    threshold_gate g2{{1, 1}, 2};
    const auto diff = exhaustive_equiv(
        [&](const bit_vector& x) {
            return bit_vector(std::vector<std::uint8_t>{eval_gate(g1, x)});
        },
        [&](const bit_vector& x) {
            return bit_vector(std::vector<std::uint8_t>{eval_gate(g2, x)});
        },
        2);
    REQUIRE_FALSE(diff.equivalent);
    REQUIRE(diff.counterexample.has_value());
    CHECK(eval_gate(g1, *diff.counterexample) != eval_gate(g2, *diff.counterexample));

    const auto id = [](const bit_vector& x) { return x; };
    CHECK_THROWS_AS(exhaustive_equiv(id, id, 21), resource_error);
}

TEST_CASE("verifier agrees with a from-scratch recomputation on small networks") {
    rng_engine g = seeded_engine(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = 1 + rand_below(g, 3);
        const std::size_t n_vec = 2 + rand_below(g, (std::size_t{1} << dim) - 1);
        const dataset data = random_dataset(n_vec, dim, 1000 + trial);

        // three gates split over one or two layers
        layered_network net;
        net.input_dim = dim;
        const bool two_layers = rand_bit(g) == 1;
        layer l1;
        const std::size_t w1 = two_layers ? 2 : 3;
        for (std::size_t i = 0; i < w1; ++i) {
            threshold_gate gate;
            for (std::size_t j = 0; j < dim; ++j)
                gate.weights.push_back(rand_in(g, -2, 2));
            gate.threshold = rand_in(g, -2, 3);
            l1.gates.push_back(std::move(gate));
        }
        net.layers.push_back(std::move(l1));
        if (two_layers) {
            layer l2;
            threshold_gate gate;
            gate.weights = {rand_in(g, -2, 2), rand_in(g, -2, 2)};
            gate.threshold = rand_in(g, -2, 3);
            l2.gates.push_back(std::move(gate));
            net.layers.push_back(std::move(l2));
        }

        // independent recomputation: evaluate gate sums with plain int64
        auto reval = [&](const bit_vector& x) {
            std::vector<std::uint8_t> cur(x.raw());
            for (const auto& l : net.layers) {
                std::vector<std::uint8_t> next;
                for (const auto& gate : l.gates) {
                    long long sum = 0;
                    for (std::size_t j = 0; j < cur.size(); ++j)
                        if (cur[j])
                            sum += gate.weights[j].convert_to<long long>();
                    next.push_back(sum >= gate.threshold.convert_to<long long>()
                                       ? 1
                                       : 0);
                }
                cur = std::move(next);
            }
            return bit_vector(cur);
        };
        std::set<bit_vector> outputs;
        bool distinct = true;
        for (const auto& x : data.vectors)
            if (!outputs.insert(reval(x)).second) distinct = false;

        REQUIRE(is_perfect_encoder(net, data).ok == distinct);
    }
}

TEST_CASE("mutation sensitivity is deterministic and bounded") {
    const dataset data = random_dataset(16, 8, 3);
    const layered_network net = build_auto3(data, make_key(data));

    const mutation_report empty = mutation_sensitivity(net, data, 0, 0);
    CHECK(empty.trials == 0);
    CHECK(empty.detected == 0);

    const mutation_report a = mutation_sensitivity(net, data, 60, 7);
    const mutation_report b = mutation_sensitivity(net, data, 60, 7);
    CHECK(a.trials == 60);
    CHECK(a.detected == b.detected);
    CHECK(a.detection_fraction() >= 0.0);
    CHECK(a.detection_fraction() <= 1.0);
}
