#include "gccd/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace gccd {

OrderGuardError::OrderGuardError(int order, int guard)
    : std::runtime_error("coloring solver refused: order " + std::to_string(order) +
                         " exceeds guard " + std::to_string(guard)),
      order_(order),
      guard_(guard) {}

int Coloring::distinct_colors() const {
    std::vector<bool> seen;
    int distinct = 0;
    for (auto c : colors) {
        if (c >= seen.size()) seen.resize(c + 1, false);
        if (!seen[c]) {
            seen[c] = true;
            ++distinct;
        }
    }
    return distinct;
}

bool is_proper(const Graph& graph, const Coloring& coloring) {
    if (coloring.colors.size() != static_cast<std::size_t>(graph.order())) {
        throw std::invalid_argument("is_proper: coloring covers " +
                                    std::to_string(coloring.colors.size()) + " of " +
                                    std::to_string(graph.order()) + " vertices");
    }
    for (auto c : coloring.colors) {
        if (c >= coloring.palette) return false;
    }
    for (std::size_t t = 0; t < graph.slot_count(); ++t) {
        if (!graph.slot(t)) continue;
        const auto pos = triangle_pair(t, graph.order());
        if (coloring.color_of(pos.row) == coloring.color_of(pos.col)) return false;
    }
    return true;
}

namespace {

void check_order_guard(const Graph& graph, int order_guard) {
    const int limit = std::min(order_guard, kHardOrderLimit);
    if (graph.order() > limit) throw OrderGuardError(graph.order(), limit);
}

// 0-based adjacency bitmasks; usable up to kHardOrderLimit vertices.
struct MaskGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    static MaskGraph from(const Graph& graph) {
        MaskGraph mg;
        mg.n = graph.order();
        mg.adj.assign(mg.n, 0);
        for (std::size_t t = 0; t < graph.slot_count(); ++t) {
            if (!graph.slot(t)) continue;
            const auto pos = triangle_pair(t, graph.order());
            mg.adj[pos.row - 1] |= 1ULL << (pos.col - 1);
            mg.adj[pos.col - 1] |= 1ULL << (pos.row - 1);
        }
        return mg;
    }

    int degree(int v) const { return std::popcount(adj[v]); }
};

// Exact k-colorability decision. Branches on the most saturated vertex and
// never opens more than one fresh color per node, which keeps refutations of
// infeasible palettes tractable.
class DecisionSearch {
public:
    DecisionSearch(const MaskGraph& g, int palette)
        : g_(g), k_(palette), color_(g.n, -1), neighbor_colors_(g.n, 0) {}

    bool feasible() { return dfs(0, -1); }

private:
    const MaskGraph& g_;
    int k_;
    std::vector<int> color_;
    std::vector<std::uint64_t> neighbor_colors_;

    int pick_vertex() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g_.n; ++v) {
            if (color_[v] != -1) continue;
            const int sat = std::popcount(neighbor_colors_[v]);
            const int deg = g_.degree(v);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    bool dfs(int colored, int max_used) {
        if (colored == g_.n) return true;
        const int v = pick_vertex();
        const std::uint64_t forbidden = neighbor_colors_[v];
        const int cap = std::min(k_ - 1, max_used + 1);
        for (int c = 0; c <= cap; ++c) {
            if ((forbidden >> c) & 1) continue;
            color_[v] = c;
            std::uint64_t touched = 0;
            for (std::uint64_t rest = g_.adj[v]; rest; rest &= rest - 1) {
                const int u = std::countr_zero(rest);
                if (color_[u] == -1 && !((neighbor_colors_[u] >> c) & 1)) {
                    neighbor_colors_[u] |= 1ULL << c;
                    touched |= 1ULL << u;
                }
            }
            if (dfs(colored + 1, std::max(max_used, c))) return true;
            for (std::uint64_t rest = touched; rest; rest &= rest - 1) {
                neighbor_colors_[std::countr_zero(rest)] &= ~(1ULL << c);
            }
            color_[v] = -1;
        }
        return false;
    }
};

// First solution of a depth-first scan in vertex order 1..m with ascending
// colors. The symmetry cap (at most one fresh color) never skips the
// lexicographically least proper coloring, so that is exactly what comes out.
class LexWitnessSearch {
public:
    LexWitnessSearch(const MaskGraph& g, int palette)
        : g_(g), k_(palette), color_(g.n, -1) {}

    bool run() { return dfs(0, -1); }
    const std::vector<int>& colors() const { return color_; }

private:
    const MaskGraph& g_;
    int k_;
    std::vector<int> color_;

    bool dfs(int v, int max_used) {
        if (v == g_.n) return true;
        std::uint64_t forbidden = 0;
        const std::uint64_t earlier = (v == 0) ? 0 : ((1ULL << v) - 1);
        for (std::uint64_t rest = g_.adj[v] & earlier; rest; rest &= rest - 1) {
            forbidden |= 1ULL << color_[std::countr_zero(rest)];
        }
        const int cap = std::min(k_ - 1, max_used + 1);
        for (int c = 0; c <= cap; ++c) {
            if ((forbidden >> c) & 1) continue;
            color_[v] = c;
            if (dfs(v + 1, std::max(max_used, c))) return true;
        }
        color_[v] = -1;
        return false;
    }
};

Coloring to_coloring(const std::vector<int>& colors, int palette) {
    Coloring out;
    out.colors.reserve(colors.size());
    for (int c : colors) out.colors.push_back(static_cast<std::uint16_t>(c));
    out.palette = static_cast<std::uint16_t>(palette);
    return out;
}

}  // namespace

Coloring dsatur_coloring(const Graph& graph) {
    const int n = graph.order();
    std::vector<int> color(n, -1);
    std::vector<int> degree(n);
    std::vector<std::vector<bool>> neighbor_has(n);  // per vertex, color -> seen
    std::vector<int> saturation(n, 0);
    for (int v = 0; v < n; ++v) {
        degree[v] = graph.degree(v + 1);
        neighbor_has[v].resize(n, false);
    }
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] != -1) continue;
            if (best == -1 || saturation[v] > saturation[best] ||
                (saturation[v] == saturation[best] && degree[v] > degree[best])) {
                best = v;
            }
        }
        int c = 0;
        while (neighbor_has[best][c]) ++c;
        color[best] = c;
        for (int u = 0; u < n; ++u) {
            if (u != best && color[u] == -1 && graph.has_edge(best + 1, u + 1) &&
                !neighbor_has[u][c]) {
                neighbor_has[u][c] = true;
                ++saturation[u];
            }
        }
    }
    const int used = 1 + *std::max_element(color.begin(), color.end());
    return to_coloring(color, used);
}

namespace {

void verify_clique(const Graph& graph, const std::vector<int>& vertices) {
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (!graph.has_edge(vertices[a], vertices[b])) {
                throw std::logic_error("clique_lower_bound: witness is not a clique");
            }
        }
    }
}

struct CliqueSearch {
    const MaskGraph& g;
    std::uint64_t best_mask = 0;
    int best_size = 0;

    void expand(std::uint64_t current, int size, std::uint64_t candidates) {
        if (size > best_size) {
            best_size = size;
            best_mask = current;
        }
        if (size + std::popcount(candidates) <= best_size) return;
        while (candidates) {
            const int v = std::countr_zero(candidates);
            candidates &= candidates - 1;
            if (size + 1 + std::popcount(candidates) <= best_size) return;
            expand(current | (1ULL << v), size + 1, candidates & g.adj[v]);
        }
    }
};

}  // namespace

CliqueWitness clique_lower_bound(const Graph& graph) {
    const auto mg = MaskGraph::from(graph);
    CliqueWitness out;
    if (mg.n <= 16) {
        CliqueSearch search{mg};
        const std::uint64_t all = (mg.n == 64) ? ~0ULL : ((1ULL << mg.n) - 1);
        search.expand(0, 0, all);
        for (std::uint64_t rest = search.best_mask; rest; rest &= rest - 1) {
            out.vertices.push_back(std::countr_zero(rest) + 1);
        }
        out.exact = true;
    } else {
        std::vector<int> order(mg.n);
        for (int v = 0; v < mg.n; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return mg.degree(a) > mg.degree(b); });
        std::uint64_t member = 0;
        for (int v : order) {
            if ((member & ~mg.adj[v]) == 0) {
                member |= 1ULL << v;
                out.vertices.push_back(v + 1);
            }
        }
        std::sort(out.vertices.begin(), out.vertices.end());
        out.exact = false;
    }
    verify_clique(graph, out.vertices);
    return out;
}

int brooks_bound(const Graph& graph) {
    const int n = graph.order();
    std::vector<int> component(n, -1);
    int bound = 0;
    for (int start = 0; start < n; ++start) {
        if (component[start] != -1) continue;
        std::vector<int> members;
        std::vector<int> stack{start};
        component[start] = start;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int u = 0; u < n; ++u) {
                if (component[u] == -1 && graph.has_edge(v + 1, u + 1)) {
                    component[u] = start;
                    stack.push_back(u);
                }
            }
        }
        const auto size = static_cast<int>(members.size());
        int max_degree = 0;
        std::size_t edge_twice = 0;
        bool all_degree_two = true;
        for (int v : members) {
            const int d = graph.degree(v + 1);
            max_degree = std::max(max_degree, d);
            edge_twice += static_cast<std::size_t>(d);
            if (d != 2) all_degree_two = false;
        }
        const std::size_t edges = edge_twice / 2;
        const bool complete = edges == triangle_size(size);
        const bool odd_cycle = size >= 3 && size % 2 == 1 && all_degree_two;
        const int comp_bound = (complete || odd_cycle) ? max_degree + 1 : max_degree;
        bound = std::max(bound, comp_bound);
    }
    return bound;
}

std::optional<Coloring> k_colorable(const Graph& graph, int palette, int order_guard) {
    if (palette < 0) throw std::invalid_argument("k_colorable: palette must be non-negative");
    check_order_guard(graph, order_guard);
    if (palette == 0) return std::nullopt;  // every graph here has at least one vertex
    const auto mg = MaskGraph::from(graph);
    const int effective = std::min(palette, mg.n);  // symmetry cap keeps colors < order
    DecisionSearch decision(mg, effective);
    if (!decision.feasible()) return std::nullopt;
    LexWitnessSearch witness(mg, effective);
    if (!witness.run()) throw std::logic_error("k_colorable: witness search contradicts decision");
    return to_coloring(witness.colors(), palette);
}

Coloring canonical_coloring(const Graph& graph, int palette, int order_guard) {
    auto result = k_colorable(graph, palette, order_guard);
    if (!result) {
        throw std::invalid_argument("canonical_coloring: graph is not colorable with palette " +
                                    std::to_string(palette));
    }
    return *result;
}

ChromaticCertificate chromatic_certificate(const Graph& graph, int order_guard) {
    check_order_guard(graph, order_guard);
    const auto mg = MaskGraph::from(graph);
    const auto clique = clique_lower_bound(graph);
    const int lower = clique.size();
    const auto greedy = dsatur_coloring(graph);
    const int upper = std::min<int>(greedy.palette, brooks_bound(graph));

    // Walk down from the upper bound; the first infeasible palette pins the
    // chromatic number and doubles as the (n-1)-refutation. When every
    // palette down to the clique size works, the clique itself refutes n-1.
    int n = lower;
    bool refuted_by_search = false;
    for (int k = upper - 1; k >= lower; --k) {
        DecisionSearch decision(mg, k);
        if (!decision.feasible()) {
            n = k + 1;
            refuted_by_search = true;
            break;
        }
    }

    ChromaticCertificate cert;
    cert.chromatic = n;
    cert.witness = canonical_coloring(graph, n, order_guard);
    cert.infeasibility_checked = refuted_by_search || lower == n;
    return cert;
}

int chromatic_number(const Graph& graph, int order_guard) {
    return chromatic_certificate(graph, order_guard).chromatic;
}

}  // namespace gccd
