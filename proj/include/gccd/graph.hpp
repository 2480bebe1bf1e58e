#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "gccd/triangle.hpp"

namespace gccd {

// Simple undirected labeled graph, vertices 1..order. Edges are stored as the
// below-diagonal bit triangle of the adjacency matrix, so a graph and its
// serialized form are the same object viewed two ways.
class Graph {
public:
    Graph() = default;
    explicit Graph(int order);

    int order() const { return order_; }
    std::size_t slot_count() const { return slots_.size(); }

    bool has_edge(int u, int v) const;
    void set_edge(int u, int v, bool present = true);

    // Direct access by linear triangle index.
    bool slot(std::size_t index) const { return slots_[index]; }
    void set_slot(std::size_t index, bool present) { slots_[index] = present; }

    std::size_t edge_count() const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    // Edge list in triangle enumeration order, each pair (row, col), row > col.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int order_ = 0;
    std::vector<bool> slots_;
};

}  // namespace gccd
