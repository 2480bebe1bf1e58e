#include "gccd/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gccd {

Graph::Graph(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("Graph: order must be positive");
    slots_.resize(triangle_size(order), false);
}

namespace {

std::size_t edge_index(int u, int v, int order) {
    if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
    if (u < 1 || v < 1 || u > order || v > order) {
        throw std::invalid_argument("Graph: vertex out of range (order " + std::to_string(order) +
                                    ", got " + std::to_string(u) + "," + std::to_string(v) + ")");
    }
    return triangle_index(std::max(u, v), std::min(u, v), order);
}

}  // namespace

bool Graph::has_edge(int u, int v) const { return slots_[edge_index(u, v, order_)]; }

void Graph::set_edge(int u, int v, bool present) { slots_[edge_index(u, v, order_)] = present; }

std::size_t Graph::edge_count() const {
    return static_cast<std::size_t>(std::count(slots_.begin(), slots_.end(), true));
}

int Graph::degree(int v) const {
    int d = 0;
    for (int u = 1; u <= order_; ++u) {
        if (u != v && has_edge(u, v)) ++d;
    }
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 1; u <= order_; ++u) {
        if (u != v && has_edge(u, v)) out.push_back(u);
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t t = 0; t < slots_.size(); ++t) {
        if (slots_[t]) {
            const auto pos = triangle_pair(t, order_);
            out.emplace_back(pos.row, pos.col);
        }
    }
    return out;
}

}  // namespace gccd
