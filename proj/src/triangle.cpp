#include "gccd/triangle.hpp"

#include <cmath>
#include <string>

namespace gccd {

std::size_t triangle_index(int row, int col, int order) {
    if (col < 1 || col >= row || row > order) {
        throw std::invalid_argument("triangle_index: need 1 <= col < row <= order, got (" +
                                    std::to_string(row) + "," + std::to_string(col) + "," +
                                    std::to_string(order) + ")");
    }
    return triangle_size(row - 1) + static_cast<std::size_t>(col - 1);
}

TrianglePosition triangle_pair(std::size_t index, int order) {
    if (index >= triangle_size(order)) {
        throw std::out_of_range("triangle_pair: index " + std::to_string(index) +
                                " outside triangle of order " + std::to_string(order));
    }
    // row-1 is the unique q with q(q-1)/2 <= index < q(q+1)/2
    auto q = static_cast<std::size_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
    while (triangle_size(static_cast<int>(q)) > index) --q;
    while (triangle_size(static_cast<int>(q + 1)) <= index) ++q;
    const int row = static_cast<int>(q) + 1;
    const int col = static_cast<int>(index - triangle_size(row - 1)) + 1;
    return {row, col};
}

OrderFit order_for_length(std::size_t bit_count) {
    if (bit_count == 0) {
        throw std::invalid_argument("order_for_length: empty payloads are unsupported");
    }
    auto m = static_cast<std::size_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(bit_count))) / 2.0);
    if (m < 2) m = 2;
    while (triangle_size(static_cast<int>(m)) < bit_count) ++m;
    while (m > 2 && triangle_size(static_cast<int>(m - 1)) >= bit_count) --m;
    const int order = static_cast<int>(m);
    return {order, triangle_size(order) - bit_count};
}

}  // namespace gccd
