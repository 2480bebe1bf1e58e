#include <doctest.h>

#include <stdexcept>

#include "gccd/codec.hpp"
#include "oracle_helpers.hpp"

using namespace gccd;

TEST_CASE("bit string literals and accessors") {
    const BitString b = BitString::from_string("0110");
    CHECK(b.size() == 4);
    CHECK(b.bit(0) == 0);
    CHECK(b.bit(1) == 1);
    CHECK(b.to_string() == "0110");
    CHECK_THROWS_AS(BitString::from_string("01x0"), std::invalid_argument);
    CHECK_THROWS_AS(b.bit(4), std::out_of_range);
}

TEST_CASE("bit string packing is MSB-first with a zero tail") {
    const BitString b = BitString::from_string("110000011");  // 9 bits
    const auto bytes = b.to_bytes();
    REQUIRE(bytes.size() == 2);
    CHECK(bytes[0] == 0xC1);
    CHECK(bytes[1] == 0x80);
    CHECK(BitString::from_bytes(bytes, 9) == b);
}

TEST_CASE("bit string from an unsigned value keeps declared width") {
    CHECK(BitString::from_unsigned(6, 3).to_string() == "110");
    CHECK(BitString::from_unsigned(6, 6).to_string() == "000110");
    CHECK(BitString::from_unsigned(0, 2).to_string() == "00");
    CHECK_THROWS_AS(BitString::from_unsigned(8, 3), std::invalid_argument);
}

TEST_CASE("extension plan for each padding mode") {
    const ExtensionPlan zero = make_plan(7, PaddingMode::zero_fill);
    CHECK(zero.payload_order == 5);
    CHECK(zero.total_order == 5);
    CHECK(zero.pin_size == 0);

    const ExtensionPlan pin = make_plan(1, PaddingMode::clique_pin, 2);
    CHECK(pin.payload_order == 2);
    CHECK(pin.total_order == 4);

    CHECK_THROWS_AS(make_plan(0, PaddingMode::zero_fill), std::invalid_argument);
    CHECK_THROWS_AS(make_plan(3, PaddingMode::zero_fill, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_plan(3, PaddingMode::clique_pin, 0), std::invalid_argument);
}

TEST_CASE("padding cells by linear index") {
    const ExtensionPlan zero = make_plan(7, PaddingMode::zero_fill);
    CHECK(padding_bit(zero, 8) == 0);

    const ExtensionPlan pin = make_plan(3, PaddingMode::clique_pin, 3);
    REQUIRE(pin.total_order == 6);
    CHECK(padding_bit(pin, triangle_index(6, 5, 6)) == 1);
    CHECK(padding_bit(pin, triangle_index(5, 2, 6)) == 0);

    CHECK_THROWS_AS(padding_bit(zero, 2), std::out_of_range);  // payload region
    CHECK_THROWS_AS(padding_bit(zero, 10), std::out_of_range);
}

TEST_CASE("payload bits become graph edges in sequence order") {
    const Graph path = bits_to_graph(BitString::from_string("110"),
                                     make_plan(3, PaddingMode::zero_fill));
    CHECK(path.order() == 3);
    CHECK(path.has_edge(2, 1));
    CHECK(path.has_edge(3, 1));
    CHECK_FALSE(path.has_edge(3, 2));

    const Graph empty = bits_to_graph(BitString::from_string("000000"),
                                      make_plan(6, PaddingMode::zero_fill));
    CHECK(empty.order() == 4);
    CHECK(empty.edge_count() == 0);

    const Graph pinned = bits_to_graph(BitString::from_string("1"),
                                       make_plan(1, PaddingMode::clique_pin, 2));
    CHECK(pinned.order() == 4);
    CHECK(pinned.edge_count() == 2);
    CHECK(pinned.has_edge(2, 1));
    CHECK(pinned.has_edge(4, 3));

    CHECK_THROWS_AS(bits_to_graph(BitString::from_string("11"),
                                  make_plan(3, PaddingMode::zero_fill)),
                    std::invalid_argument);
}

TEST_CASE("graph edges read back as payload bits") {
    const Graph path = bits_to_graph(BitString::from_string("110"),
                                     make_plan(3, PaddingMode::zero_fill));
    CHECK(graph_to_bits(path, 3).to_string() == "110");

    CHECK(graph_to_bits(Graph(4), 6).to_string() == "000000");

    Graph triangle(3);
    triangle.set_edge(2, 1);
    triangle.set_edge(3, 1);
    triangle.set_edge(3, 2);
    CHECK(graph_to_bits(triangle, 3).to_string() == "111");

    CHECK_THROWS_AS(graph_to_bits(triangle, 4), std::invalid_argument);
}

TEST_CASE("payload roundtrips through the graph for both modes") {
    SplitMix64 rng(0x5eedc0dec0ffeeULL);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t l = 1 + rng.below(2000);
        const BitString payload = testhelp::random_bits(l, rng);
        const ExtensionPlan zero = make_plan(l, PaddingMode::zero_fill);
        CHECK(graph_to_bits(bits_to_graph(payload, zero), l) == payload);
        const int pin = static_cast<int>(1 + rng.below(4));
        const ExtensionPlan pinned = make_plan(l, PaddingMode::clique_pin, pin);
        CHECK(graph_to_bits(bits_to_graph(payload, pinned), l) == payload);
    }
}

TEST_CASE("identical plan inputs give identical graphs") {
    SplitMix64 rng(0xfeedULL);
    for (std::size_t l : {1, 5, 12, 40}) {
        const BitString payload = testhelp::random_bits(l, rng);
        const Graph a = bits_to_graph(payload, make_plan(l, PaddingMode::clique_pin, 3));
        const Graph b = bits_to_graph(payload, make_plan(l, PaddingMode::clique_pin, 3));
        CHECK(a == b);
        const Graph c = bits_to_graph(payload, make_plan(l, PaddingMode::zero_fill));
        const Graph d = bits_to_graph(payload, make_plan(l, PaddingMode::zero_fill));
        CHECK(c == d);
    }
}

TEST_CASE("pinned block is complete and detached for every short payload") {
    for (std::size_t l = 1; l <= 10; ++l) {
        for (int r = 1; r <= 4; ++r) {
            const ExtensionPlan plan = make_plan(l, PaddingMode::clique_pin, r);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << l); ++mask) {
                BitString payload;
                for (std::size_t t = 0; t < l; ++t) payload.append((mask >> t) & 1);
                const Graph g = bits_to_graph(payload, plan);
                const int first_pinned = plan.total_order - r + 1;
                for (int i = first_pinned; i <= plan.total_order; ++i) {
                    for (int j = first_pinned; j < i; ++j) CHECK(g.has_edge(i, j));
                    for (int j = 1; j < first_pinned; ++j) CHECK_FALSE(g.has_edge(i, j));
                }
            }
        }
    }
}

TEST_CASE("full matrix description lists edges then diagonal colors") {
    const Graph path = bits_to_graph(BitString::from_string("110"),
                                     make_plan(3, PaddingMode::zero_fill));
    const std::uint16_t path_colors[] = {0, 1, 1};
    const SymbolSequence s = serialize_symbols(path, path_colors);
    CHECK(s.below_diagonal == std::vector<std::uint8_t>{1, 1, 0});
    CHECK(s.diagonal == std::vector<std::uint16_t>{0, 1, 1});

    const std::uint16_t pair_colors[] = {0, 0};
    const SymbolSequence t = serialize_symbols(Graph(2), pair_colors);
    CHECK(t.below_diagonal == std::vector<std::uint8_t>{0});
    CHECK(t.diagonal == std::vector<std::uint16_t>{0, 0});

    Graph triangle(3);
    triangle.set_edge(2, 1);
    triangle.set_edge(3, 1);
    triangle.set_edge(3, 2);
    const std::uint16_t tri_colors[] = {0, 1, 2};
    const SymbolSequence u = serialize_symbols(triangle, tri_colors);
    CHECK(u.below_diagonal == std::vector<std::uint8_t>{1, 1, 1});
    CHECK(u.diagonal == std::vector<std::uint16_t>{0, 1, 2});

    CHECK_THROWS_AS(serialize_symbols(triangle, pair_colors), std::invalid_argument);
}
