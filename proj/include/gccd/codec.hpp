#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gccd/bitstring.hpp"
#include "gccd/graph.hpp"

namespace gccd {

enum class PaddingMode : std::uint8_t {
    zero_fill = 0,   // unused cells carry 0, chromatic number unchanged
    clique_pin = 1,  // disjoint complete block on extra vertices pins the palette
};

// Shared recipe for extending a payload to a full bit triangle. Both endpoints
// rebuild the plan from (payload_len, mode, pin_size) alone, so padding is
// regenerated rather than transmitted.
struct ExtensionPlan {
    std::size_t payload_len = 0;  // l, in bits
    int payload_order = 0;        // smallest order fitting l
    int total_order = 0;          // payload_order, plus pin_size for clique_pin
    PaddingMode mode = PaddingMode::zero_fill;
    int pin_size = 0;             // 0 unless clique_pin

    friend bool operator==(const ExtensionPlan&, const ExtensionPlan&) = default;
};

// Builds the plan for a payload length. pin_size must be 0 for zero_fill and
// >= 1 for clique_pin. Throws std::invalid_argument on violations or empty payload.
ExtensionPlan make_plan(std::size_t payload_len, PaddingMode mode, int pin_size = 0);

// Value of the padding cell at linear index `index`, which must lie in
// [payload_len, triangle_size(total_order)). clique_pin cells are 1 exactly
// when both endpoints fall in the pinned trailing block.
int padding_bit(const ExtensionPlan& plan, std::size_t index);

// Payload bits fill the leading triangle cells, the plan fills the rest.
Graph bits_to_graph(const BitString& payload, const ExtensionPlan& plan);

// First bit_count triangle cells of the graph; left inverse of bits_to_graph
// on the payload region.
BitString graph_to_bits(const Graph& graph, std::size_t bit_count);

// Full matrix description: every below-diagonal bit in enumeration order,
// then the diagonal color entries, one per vertex.
struct SymbolSequence {
    std::vector<std::uint8_t> below_diagonal;
    std::vector<std::uint16_t> diagonal;

    friend bool operator==(const SymbolSequence&, const SymbolSequence&) = default;
};

SymbolSequence serialize_symbols(const Graph& graph, std::span<const std::uint16_t> vertex_colors);

}  // namespace gccd
