#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gccd/graph.hpp"

namespace gccd {

// Default ceiling on the order accepted by the exact solvers. Beyond it the
// solver refuses rather than silently degrade. Callers may raise it up to
// kHardOrderLimit.
inline constexpr int kDefaultOrderGuard = 24;
inline constexpr int kHardOrderLimit = 64;

class OrderGuardError : public std::runtime_error {
public:
    explicit OrderGuardError(int order, int guard);
    int order() const { return order_; }
    int guard() const { return guard_; }

private:
    int order_;
    int guard_;
};

// Vertex -> color map over the palette {0, ..., palette-1}; entry v-1 holds
// the color of vertex v. These are the values stored on the matrix diagonal.
struct Coloring {
    std::vector<std::uint16_t> colors;
    std::uint16_t palette = 0;

    std::size_t size() const { return colors.size(); }
    std::uint16_t color_of(int vertex) const { return colors[static_cast<std::size_t>(vertex) - 1]; }
    int distinct_colors() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

// True iff adjacent vertices always differ and every entry is below the
// palette size. Throws std::invalid_argument when sizes disagree.
bool is_proper(const Graph& graph, const Coloring& coloring);

// Deterministic DSATUR greedy coloring: highest saturation first, ties by
// degree, then by lowest vertex label. Always proper; an upper bound witness.
Coloring dsatur_coloring(const Graph& graph);

struct CliqueWitness {
    std::vector<int> vertices;  // induces a complete subgraph
    bool exact = false;         // true when found by exhaustive search
    int size() const { return static_cast<int>(vertices.size()); }
};

// Exact maximum clique up to order 16, greedy beyond (flagged by `exact`).
CliqueWitness clique_lower_bound(const Graph& graph);

// Max over connected components of: max degree + 1 for complete components
// and odd cycles, max degree otherwise. Upper-bounds the chromatic number.
int brooks_bound(const Graph& graph);

// Lexicographically least proper coloring with the given palette, or nullopt
// when none exists. Palette 0 fits only the (disallowed) empty-vertex graph.
std::optional<Coloring> k_colorable(const Graph& graph, int palette,
                                    int order_guard = kDefaultOrderGuard);

// Lexicographically least proper coloring, scanning vertices upward and
// colors ascending; vertex 1 always receives color 0. Throws
// std::invalid_argument when the graph is not colorable with this palette.
Coloring canonical_coloring(const Graph& graph, int palette,
                            int order_guard = kDefaultOrderGuard);

struct ChromaticCertificate {
    int chromatic = 0;          // the minimum feasible palette size
    Coloring witness;           // canonical coloring with exactly that palette
    bool infeasibility_checked = false;  // (chromatic-1)-colorability was refuted
};

// Exact chromatic number with a canonical witness. The search window is
// clipped to [clique lower bound, min(DSATUR colors, Brooks bound)].
ChromaticCertificate chromatic_certificate(const Graph& graph,
                                           int order_guard = kDefaultOrderGuard);

int chromatic_number(const Graph& graph, int order_guard = kDefaultOrderGuard);

}  // namespace gccd
