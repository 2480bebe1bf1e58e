#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace gccd {

// Below-diagonal cells of a symmetric adjacency matrix, enumerated row by
// row: (2,1), (3,1), (3,2), (4,1), (4,2), (4,3), ...  Vertices are 1-based.
struct TrianglePosition {
    int row = 0;  // >= 2
    int col = 0;  // 1 <= col < row

    friend bool operator==(const TrianglePosition&, const TrianglePosition&) = default;
};

// Number of below-diagonal cells for a matrix of the given order.
constexpr std::size_t triangle_size(int order) {
    return static_cast<std::size_t>(order) * (order - 1) / 2;
}

// Linear 0-based index of cell (row, col) in enumeration order.
// Throws std::invalid_argument unless 1 <= col < row <= order.
std::size_t triangle_index(int row, int col, int order);

// Inverse of triangle_index. Throws std::out_of_range for index >= triangle_size(order).
TrianglePosition triangle_pair(std::size_t index, int order);

struct OrderFit {
    int order = 0;       // smallest order whose triangle holds the payload
    std::size_t slack = 0;  // unused trailing cells
};

// Smallest order m with triangle_size(m) >= bit_count, plus the leftover cell
// count. bit_count == 0 is rejected.
OrderFit order_for_length(std::size_t bit_count);

}  // namespace gccd
