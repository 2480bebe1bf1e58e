#include "gccd/codec.hpp"

#include <stdexcept>
#include <string>

namespace gccd {

ExtensionPlan make_plan(std::size_t payload_len, PaddingMode mode, int pin_size) {
    const auto fit = order_for_length(payload_len);  // rejects payload_len == 0
    ExtensionPlan plan;
    plan.payload_len = payload_len;
    plan.payload_order = fit.order;
    plan.mode = mode;
    switch (mode) {
        case PaddingMode::zero_fill:
            if (pin_size != 0) {
                throw std::invalid_argument("make_plan: zero_fill takes no pinned vertices");
            }
            plan.total_order = fit.order;
            plan.pin_size = 0;
            break;
        case PaddingMode::clique_pin:
            if (pin_size < 1) {
                throw std::invalid_argument("make_plan: clique_pin needs pin_size >= 1");
            }
            plan.total_order = fit.order + pin_size;
            plan.pin_size = pin_size;
            break;
        default:
            throw std::invalid_argument("make_plan: unknown padding mode");
    }
    return plan;
}

int padding_bit(const ExtensionPlan& plan, std::size_t index) {
    if (index < plan.payload_len || index >= triangle_size(plan.total_order)) {
        throw std::out_of_range("padding_bit: index " + std::to_string(index) +
                                " outside the padding region");
    }
    if (plan.mode == PaddingMode::zero_fill) return 0;
    const auto pos = triangle_pair(index, plan.total_order);
    const int first_pinned = plan.total_order - plan.pin_size + 1;
    return (pos.row >= first_pinned && pos.col >= first_pinned) ? 1 : 0;
}

Graph bits_to_graph(const BitString& payload, const ExtensionPlan& plan) {
    if (payload.size() != plan.payload_len) {
        throw std::invalid_argument("bits_to_graph: payload length " +
                                    std::to_string(payload.size()) + " does not match plan (" +
                                    std::to_string(plan.payload_len) + ")");
    }
    Graph graph(plan.total_order);
    const std::size_t slots = triangle_size(plan.total_order);
    for (std::size_t t = 0; t < slots; ++t) {
        const int bit = t < plan.payload_len ? payload.bit(t) : padding_bit(plan, t);
        if (bit) graph.set_slot(t, true);
    }
    return graph;
}

BitString graph_to_bits(const Graph& graph, std::size_t bit_count) {
    if (bit_count > graph.slot_count()) {
        throw std::invalid_argument("graph_to_bits: requested " + std::to_string(bit_count) +
                                    " bits from a triangle of " +
                                    std::to_string(graph.slot_count()));
    }
    std::vector<std::uint8_t> bits(bit_count);
    for (std::size_t t = 0; t < bit_count; ++t) bits[t] = graph.slot(t) ? 1 : 0;
    return BitString(std::move(bits));
}

SymbolSequence serialize_symbols(const Graph& graph, std::span<const std::uint16_t> vertex_colors) {
    if (vertex_colors.size() != static_cast<std::size_t>(graph.order())) {
        throw std::invalid_argument("serialize_symbols: one color per vertex required");
    }
    SymbolSequence seq;
    seq.below_diagonal.resize(graph.slot_count());
    for (std::size_t t = 0; t < graph.slot_count(); ++t) {
        seq.below_diagonal[t] = graph.slot(t) ? 1 : 0;
    }
    seq.diagonal.assign(vertex_colors.begin(), vertex_colors.end());
    return seq;
}

}  // namespace gccd
