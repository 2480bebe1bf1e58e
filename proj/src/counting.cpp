#include "gccd/counting.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gccd/triangle.hpp"

namespace gccd {

std::string PowerOfTwoCount::decimal() const {
    // Base-1e9 limbs, least significant first; doubling keeps this exact for
    // any exponent we can reach.
    std::vector<std::uint32_t> limbs{1};
    for (std::uint64_t step = 0; step < exponent; ++step) {
        std::uint32_t carry = 0;
        for (auto& limb : limbs) {
            const std::uint64_t doubled = 2ULL * limb + carry;
            limb = static_cast<std::uint32_t>(doubled % 1'000'000'000);
            carry = static_cast<std::uint32_t>(doubled / 1'000'000'000);
        }
        if (carry != 0) limbs.push_back(carry);
    }
    std::string out = std::to_string(limbs.back());
    for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
        std::string chunk = std::to_string(*it);
        out += std::string(9 - chunk.size(), '0') + chunk;
    }
    return out;
}

double PowerOfTwoCount::approx() const {
    return std::ldexp(1.0, exponent > 1024 ? 1024 : static_cast<int>(exponent));
}

double DyadicProbability::value() const {
    return std::ldexp(1.0, -static_cast<int>(std::min<std::uint64_t>(neg_exponent, 4096)));
}

std::string DyadicProbability::repr() const {
    if (neg_exponent == 0) return "2^0";
    return "2^-" + std::to_string(neg_exponent);
}

Rational make_rational(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    const std::uint64_t g = num == 0 ? den : std::gcd(num, den);
    return Rational{num / g, den / g};
}

std::string Rational::repr() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

double Rational::value() const {
    return static_cast<double>(num) / static_cast<double>(den);
}

int PartitionSpec::total() const {
    int sum = 0;
    for (int part : parts) sum += part;
    return sum;
}

int PartitionSpec::part_count() const { return static_cast<int>(parts.size()); }

bool PartitionSpec::valid() const {
    if (parts.empty()) return false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) return false;
        if (i > 0 && parts[i] > parts[i - 1]) return false;
    }
    return true;
}

namespace {

void check_class_count(int m, int n) {
    if (m < 1) throw std::invalid_argument("vertex count must be positive");
    if (n < 1 || n > m) {
        throw std::invalid_argument("class count must lie in [1, " + std::to_string(m) +
                                    "], got " + std::to_string(n));
    }
}

void emit_partitions(int remaining, int slots, int max_part, std::vector<int>& scratch,
                     const std::function<void(const PartitionSpec&)>& visit) {
    if (slots == 0) {
        visit(PartitionSpec{scratch});
        return;
    }
    const int hi = std::min(max_part, remaining - (slots - 1));
    const int lo = (remaining + slots - 1) / slots;
    for (int part = hi; part >= lo; --part) {
        scratch.push_back(part);
        emit_partitions(remaining - part, slots - 1, part, scratch, visit);
        scratch.pop_back();
    }
}

PartitionSpec balanced_partition(int m, int n) {
    const int q = m / n;
    const int r = m % n;
    std::vector<int> parts;
    parts.reserve(n);
    for (int i = 0; i < r; ++i) parts.push_back(q + 1);
    for (int i = r; i < n; ++i) parts.push_back(q);
    return PartitionSpec{std::move(parts)};
}

std::uint64_t within_class_pairs(const PartitionSpec& p) {
    std::uint64_t sum = 0;
    for (int part : p.parts) sum += triangle_size(part);
    return sum;
}

// Partition enumeration stays affordable up to this order; past it the
// balanced optimum is used directly (its optimality does not depend on m).
constexpr int kEnumerationLimit = 28;

}  // namespace

void for_each_partition(int m, int n, const std::function<void(const PartitionSpec&)>& visit) {
    check_class_count(m, n);
    std::vector<int> scratch;
    scratch.reserve(n);
    emit_partitions(m, n, m, scratch, visit);
}

std::vector<PartitionSpec> partitions_into(int m, int n) {
    std::vector<PartitionSpec> out;
    for_each_partition(m, n, [&](const PartitionSpec& p) { out.push_back(p); });
    return out;
}

PowerOfTwoCount total_graph_count(int m) {
    if (m < 1) throw std::invalid_argument("vertex count must be positive");
    return PowerOfTwoCount{triangle_size(m)};
}

std::uint64_t cross_pair_exponent(const PartitionSpec& p) {
    if (!p.valid()) {
        throw std::invalid_argument("partition parts must be positive and non-increasing");
    }
    // (x2+...+xn)x1 + (x3+...+xn)x2 + ... + xn*x(n-1), via suffix sums.
    std::uint64_t sum = 0;
    std::uint64_t suffix = 0;
    for (std::size_t i = p.parts.size(); i-- > 0;) {
        sum += static_cast<std::uint64_t>(p.parts[i]) * suffix;
        suffix += static_cast<std::uint64_t>(p.parts[i]);
    }
    const std::uint64_t via_complement = triangle_size(p.total()) - within_class_pairs(p);
    if (sum != via_complement) {
        throw std::logic_error("cross_pair_exponent: pair-count identity violated");
    }
    return sum;
}

PowerOfTwoCount partition_graph_count(const PartitionSpec& p) {
    return PowerOfTwoCount{cross_pair_exponent(p)};
}

MaxPartitionCount max_partition_count(int m, int n) {
    check_class_count(m, n);
    PartitionSpec balanced = balanced_partition(m, n);
    const std::uint64_t balanced_exp = cross_pair_exponent(balanced);
    if (m <= kEnumerationLimit) {
        std::uint64_t best = 0;
        std::uint64_t winners = 0;
        PartitionSpec argmax;
        for_each_partition(m, n, [&](const PartitionSpec& p) {
            const std::uint64_t e = cross_pair_exponent(p);
            if (e > best || winners == 0) {
                best = e;
                argmax = p;
                winners = 1;
            } else if (e == best) {
                ++winners;
            }
        });
        if (best != balanced_exp || argmax.parts != balanced.parts || winners != 1) {
            throw std::logic_error("max_partition_count: balanced partition is not the unique optimum");
        }
    }
    return MaxPartitionCount{PowerOfTwoCount{balanced_exp}, std::move(balanced)};
}

CountBoundCheck verify_count_bound(int m, int n) {
    check_class_count(m, n);
    const std::uint64_t lhs = triangle_size(m);
    const std::uint64_t rhs =
        static_cast<std::uint64_t>(m - n) + max_partition_count(m, n).count.exponent;
    return CountBoundCheck{m - n, lhs >= rhs, lhs == rhs};
}

UndetectedErrorBound undetected_probability_bound(int m, int n) {
    check_class_count(m, n);
    const std::uint64_t max_exp = max_partition_count(m, n).count.exponent;
    const std::uint64_t exact_neg = triangle_size(m) - max_exp;
    const std::uint64_t cap_neg = static_cast<std::uint64_t>(m - n);
    if (exact_neg < cap_neg) {
        throw std::logic_error("undetected_probability_bound: exact bound exceeds the cap");
    }
    return UndetectedErrorBound{DyadicProbability{exact_neg}, DyadicProbability{cap_neg}};
}

Rational overhead_ratio(int m) {
    if (m < 2) throw std::invalid_argument("overhead ratio needs at least two vertices");
    return make_rational(static_cast<std::uint64_t>(m) - 1, 2);
}

namespace {

// Chromatic number by covering the vertex set with independent sets; this is
// deliberately a different route from the search-based solver so the two can
// be played against each other in tests.
int chi_by_cover(int m, std::uint32_t edge_mask, const std::vector<TrianglePosition>& slot_pairs,
                 std::vector<std::uint32_t>& adj, std::vector<std::uint8_t>& indep,
                 std::vector<std::uint8_t>& cover) {
    adj.assign(m, 0);
    for (std::size_t t = 0; t < slot_pairs.size(); ++t) {
        if ((edge_mask >> t) & 1) {
            const int i = slot_pairs[t].row - 1;
            const int j = slot_pairs[t].col - 1;
            adj[i] |= 1U << j;
            adj[j] |= 1U << i;
        }
    }
    const std::uint32_t full = (1U << m) - 1;
    indep.assign(full + 1, 0);
    indep[0] = 1;
    for (std::uint32_t s = 1; s <= full; ++s) {
        const int v = std::countr_zero(s);
        const std::uint32_t rest = s & (s - 1);
        indep[s] = indep[rest] && (adj[v] & rest) == 0;
    }
    cover.assign(full + 1, 0);
    constexpr std::uint8_t kInf = 255;
    for (std::uint32_t s = 1; s <= full; ++s) {
        const int v = std::countr_zero(s);
        const std::uint32_t rest = s ^ (1U << v);
        std::uint8_t best = kInf;
        std::uint32_t sub = rest;
        while (true) {
            const std::uint32_t cls = sub | (1U << v);
            if (indep[cls] && cover[s ^ cls] + 1 < best) {
                best = static_cast<std::uint8_t>(cover[s ^ cls] + 1);
            }
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
        cover[s] = best;
    }
    return cover[full];
}

std::vector<TrianglePosition> slot_pair_table(int m) {
    std::vector<TrianglePosition> pairs;
    pairs.reserve(triangle_size(m));
    for (std::size_t t = 0; t < triangle_size(m); ++t) pairs.push_back(triangle_pair(t, m));
    return pairs;
}

}  // namespace

std::vector<std::uint8_t> chromatic_table(int m) {
    if (m < 1 || m > 6) throw std::invalid_argument("chromatic_table handles 1..6 vertices");
    const auto pairs = slot_pair_table(m);
    const std::uint64_t graphs = 1ULL << triangle_size(m);
    std::vector<std::uint8_t> table(graphs);
    std::vector<std::uint32_t> adj;
    std::vector<std::uint8_t> indep, cover;
    for (std::uint64_t mask = 0; mask < graphs; ++mask) {
        table[mask] = static_cast<std::uint8_t>(
            chi_by_cover(m, static_cast<std::uint32_t>(mask), pairs, adj, indep, cover));
    }
    return table;
}

std::uint64_t ChromaticSpectrum::total() const {
    std::uint64_t sum = 0;
    for (auto c : counts) sum += c;
    return sum;
}

ChromaticSpectrum chromatic_spectrum(int m) {
    if (m < 1 || m > 7) throw std::invalid_argument("chromatic_spectrum handles 1..7 vertices");
    ChromaticSpectrum spectrum;
    spectrum.order = m;
    spectrum.counts.assign(m, 0);
    const auto pairs = slot_pair_table(m);
    const std::uint64_t graphs = 1ULL << triangle_size(m);
    std::vector<std::uint32_t> adj;
    std::vector<std::uint8_t> indep, cover;
    for (std::uint64_t mask = 0; mask < graphs; ++mask) {
        const int chi = chi_by_cover(m, static_cast<std::uint32_t>(mask), pairs, adj, indep, cover);
        ++spectrum.counts[chi - 1];
    }
    return spectrum;
}

std::uint64_t partition_count_by_enumeration(int m, const PartitionSpec& p) {
    if (m < 1 || m > 6) throw std::invalid_argument("partition enumeration handles 1..6 vertices");
    if (!p.valid() || p.total() != m) {
        throw std::invalid_argument("partition must consist of positive parts summing to the order");
    }
    std::vector<int> vertex_class(m);
    int v = 0;
    for (std::size_t cls = 0; cls < p.parts.size(); ++cls) {
        for (int i = 0; i < p.parts[cls]; ++i) vertex_class[v++] = static_cast<int>(cls);
    }
    const auto pairs = slot_pair_table(m);
    std::uint32_t same_class = 0;
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        if (vertex_class[pairs[t].row - 1] == vertex_class[pairs[t].col - 1]) {
            same_class |= 1U << t;
        }
    }
    const std::uint64_t graphs = 1ULL << triangle_size(m);
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < graphs; ++mask) {
        if ((mask & same_class) == 0) ++count;
    }
    return count;
}

}  // namespace gccd
