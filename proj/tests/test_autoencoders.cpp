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

}  // namespace

TEST_CASE("three-layer autoencoder round-trips the worked dataset") {
    const dataset data = example_four();
    const separating_key key = make_key(data);
    const layered_network net = build_auto3(data, key);
    CHECK(compute_stats(net).widths == std::vector<std::size_t>{3, 4, 3});
    CHECK(net.middle_index == 2);
    for (const auto& x : data.vectors)
        REQUIRE(eval_network(net, x).back() == x);
}

TEST_CASE("three-layer autoencoder on one vector") {
    const dataset one = dataset::of({bv("0110")});
    const layered_network net = build_auto3(one, make_key(one));
    CHECK(eval_network(net, one.vectors[0]).back() == one.vectors[0]);
}

TEST_CASE("three-layer autoencoder widths and verification at n=64") {
    const dataset data = random_dataset(64, 32, 5);
    const layered_network net = build_auto3(data, make_key(data));
    CHECK(compute_stats(net).widths == std::vector<std::size_t>{32, 64, 32});
    CHECK(is_perfect_autoencoder(net, data).passed());
}

TEST_CASE("three-layer autoencoder equals step encoder stacked with its decoder") {
    const dataset data = example_four();
    const separating_key key = make_key(data);

    std::vector<bit_vector> codes;
    for (std::size_t i = 0; i < data.size(); ++i)
        codes.push_back(sorted_vector(data, key, i));
    layered_network decoder;
    decoder.input_dim = data.size();
    decoder.layers.push_back(build_gmap_layer(codes));

    const layered_network stacked = stack(build_step_encoder(key), decoder, true);
    CHECK(stacked == build_auto3(data, key));
}

TEST_CASE("five-layer square-root autoencoder on the worked dataset") {
    const dataset data = example_four();
    const separating_key key = make_key(data);
    const sqrt_decomposition dec = sqrt_decomposition::from(key);
    const layered_network net = build_auto5_sqrt(data, key, dec);
    CHECK(compute_stats(net).widths == std::vector<std::size_t>{3, 5, 4, 6, 3});
    CHECK(net.middle_index == 3);
    for (const auto& x : data.vectors)
        REQUIRE(eval_network(net, x).back() == x);
}

TEST_CASE("five-layer square-root autoencoder, n=64: widths and selector rows") {
    const dataset data = random_dataset(64, 32, 9);
    const separating_key key = make_key(data);
    const sqrt_decomposition dec = sqrt_decomposition::from(key);
    const layered_network net = build_auto5_sqrt(data, key, dec);
    CHECK(compute_stats(net).widths ==
          std::vector<std::size_t>{32, 40, 16, 256, 32});
    CHECK(is_perfect_autoencoder(net, data).passed());

    // At most one selector gate per output coordinate fires on any input.
    const std::size_t r = dec.r;
    for (const auto& x : data.vectors) {
        const eval_trace trace = eval_network(net, x);
        const bit_vector& selector = trace[3];
        for (std::size_t j = 0; j < data.dim; ++j) {
            std::size_t active = 0;
            for (std::size_t i = 0; i < r; ++i) active += selector[i * data.dim + j];
            REQUIRE(active <= 1);
        }
    }
}

TEST_CASE("split of the five-layer autoencoder gives the square-root encoder") {
    const dataset data = random_dataset(17, 8, 2);
    const separating_key key = make_key(data);
    const sqrt_decomposition dec = sqrt_decomposition::from(key);
    auto [enc, d] = split_at_middle(build_auto5_sqrt(data, key, dec));
    CHECK(enc == build_sqrt_encoder(key, dec));
    CHECK(d.layers.size() == 2);
    CHECK(d.layers[0].width() == dec.r * data.dim);
    CHECK(d.layers[1].width() == data.dim);
}

TEST_CASE("step autoencoder compresses step vectors to their binary index") {
    const layered_network net = build_step_auto(4);
    CHECK(compute_stats(net).widths == std::vector<std::size_t>{4, 2, 4});

    const eval_trace trace = eval_network(net, bv("1110"));  // level 2
    CHECK(trace[1] == bv("01"));  // gate order: bit 0 first, so value 2 reads "01"
    CHECK(trace[2] == bv("1110"));

    // the leading bit decodes on for every step input
    for (std::size_t i = 0; i < 4; ++i) {
        const eval_trace t = eval_network(net, make_step_vector(i, 4));
        REQUIRE(t[2][0] == 1);
        REQUIRE(code_value_lsb(t[1]) == i);
        REQUIRE(t[2] == make_step_vector(i, 4));
    }
}

TEST_CASE("step autoencoder degenerate and non-power-of-two sizes") {
    const layered_network one = build_step_auto(1);
    CHECK(compute_stats(one).widths == std::vector<std::size_t>{1, 1, 1});
    CHECK(eval_network(one, bv("1")).back() == bv("1"));

    for (std::size_t s : {2ul, 3ul, 5ul, 6ul, 7ul, 12ul}) {
        const layered_network net = build_step_auto(s);
        CHECK(compute_stats(net).widths ==
              std::vector<std::size_t>{s, index_code_width(s), s});
        for (std::size_t i = 0; i < s; ++i)
            REQUIRE(eval_network(net, make_step_vector(i, s)).back() ==
                    make_step_vector(i, s));
    }
}

TEST_CASE("five-layer logarithmic autoencoder") {
    const dataset data = random_dataset(64, 32, 4);
    const separating_key key = make_key(data);
    const layered_network net = build_auto5_log(data, key);
    CHECK(compute_stats(net).widths ==
          std::vector<std::size_t>{32, 64, 6, 64, 32});
    CHECK(net.middle_index == 3);
    CHECK(is_perfect_autoencoder(net, data).passed());

    // middle activation reads back as the sorted rank
    for (std::size_t i = 0; i < data.size(); ++i) {
        const eval_trace trace = eval_network(net, sorted_vector(data, key, i));
        REQUIRE(code_value_lsb(trace[2]) == i);
    }
}

TEST_CASE("five-layer logarithmic autoencoder at n=2") {
    const dataset data = random_dataset(2, 6, 1);
    const layered_network net = build_auto5_log(data, make_key(data));
    CHECK(compute_stats(net).widths == std::vector<std::size_t>{6, 2, 1, 2, 6});
    CHECK(is_perfect_autoencoder(net, data).passed());
}

TEST_CASE("middle substitution leaves the seam activations unchanged") {
    const dataset data = random_dataset(17, 10, 6);
    const separating_key key = make_key(data);
    const sqrt_decomposition dec = sqrt_decomposition::from(key);

    // auto5-log replaces auto3's middle: the restored step vector (layer 4)
    // must equal auto3's middle activation (layer 2) on every input.
    const layered_network a3 = build_auto3(data, key);
    const layered_network a5 = build_auto5_log(data, key);
    for (const auto& x : data.vectors) {
        const eval_trace t3 = eval_network(a3, x);
        const eval_trace t5 = eval_network(a5, x);
        REQUIRE(t5[3] == t3[1]);
        REQUIRE(t5.back() == t3.back());
    }

    // auto7 replaces auto5-sqrt's middle: the restored bank pair (layer 4
    // output, trace index 4) must equal auto5-sqrt's middle (trace index 2).
    const layered_network a5s = build_auto5_sqrt(data, key, dec);
    const layered_network a7 = build_auto7(data, key, dec);
    for (const auto& x : data.vectors) {
        const eval_trace ts = eval_network(a5s, x);
        const eval_trace t7 = eval_network(a7, x);
        REQUIRE(t7[4] == ts[2]);
        REQUIRE(t7.back() == ts.back());
    }
}

TEST_CASE("seven-layer autoencoder") {
    const dataset data = random_dataset(64, 32, 8);
    const separating_key key = make_key(data);
    const sqrt_decomposition dec = sqrt_decomposition::from(key);
    const layered_network net = build_auto7(data, key, dec);
    CHECK(compute_stats(net).widths ==
          std::vector<std::size_t>{32, 40, 16, 6, 16, 256, 32});
    CHECK(net.middle_index == 4);
    CHECK(is_perfect_autoencoder(net, data).passed());

    // middle = (binary(block), binary(offset)) for the square case
    for (std::size_t i = 0; i < data.size(); ++i) {
        const eval_trace trace = eval_network(net, sorted_vector(data, key, i));
        const bit_vector& mid = trace[3];
        REQUIRE(mid.size() == 6);
        std::vector<std::uint8_t> hi(mid.raw().begin(), mid.raw().begin() + 3);
        std::vector<std::uint8_t> lo(mid.raw().begin() + 3, mid.raw().end());
        REQUIRE(code_value_lsb(bit_vector(hi)) == dec.block_of(i));
        REQUIRE(code_value_lsb(bit_vector(lo)) == dec.offset_of(i));
    }
}

TEST_CASE("seven-layer autoencoder on the worked dataset has middle width 2") {
    const dataset data = example_four();
    const separating_key key = make_key(data);
    const sqrt_decomposition dec = sqrt_decomposition::from(key);
    const layered_network net = build_auto7(data, key, dec);
    CHECK(net.width_at(*net.middle_index) == 2);
    CHECK(is_perfect_autoencoder(net, data).passed());
}

TEST_CASE("every autoencoder is perfect across the matrix, encoder half included") {
    for (std::size_t n : {1ul, 2ul, 3ul, 4ul, 8ul, 17ul}) {
        for (std::size_t dim : {5ul, 16ul}) {
            if (bigint(n) > (bigint(1) << dim)) continue;
            const dataset data = random_dataset(n, dim, 3 * n + dim);
            const separating_key key = make_key(data);
            const sqrt_decomposition dec = sqrt_decomposition::from(key);
            for (const layered_network& net :
                 {build_auto3(data, key), build_auto5_sqrt(data, key, dec),
                  build_auto5_log(data, key), build_auto7(data, key, dec)}) {
                REQUIRE(is_perfect_autoencoder(net, data).passed());
                auto [enc, dec_net] = split_at_middle(net);
                REQUIRE(is_perfect_encoder(enc, data).ok);
            }
        }
    }
}
