#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gccd/graph.hpp"

namespace gccd {

// Exact count 2^exponent. Every graph-count quantity here is a power of two,
// so comparisons and ratios stay in exponent arithmetic; the decimal rendering
// exists only for the reporting boundary.
struct PowerOfTwoCount {
    std::uint64_t exponent = 0;

    std::string decimal() const;  // exact big-integer rendering
    double approx() const;

    friend auto operator<=>(const PowerOfTwoCount&, const PowerOfTwoCount&) = default;
};

// Exact value 2^-neg_exponent.
struct DyadicProbability {
    std::uint64_t neg_exponent = 0;

    double value() const;
    std::string repr() const;  // "2^-k"

    friend auto operator<=>(const DyadicProbability&, const DyadicProbability&) = default;
};

struct Rational {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    std::string repr() const;  // "3/2", or "1" when the denominator reduces away
    double value() const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::uint64_t num, std::uint64_t den);

// Color-class sizes x1 >= x2 >= ... >= xn >= 1.
struct PartitionSpec {
    std::vector<int> parts;

    int total() const;       // m, the sum
    int part_count() const;  // n
    bool valid() const;      // positive, nonincreasing

    friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

// All partitions of m into exactly n positive parts, reverse-lexicographic.
std::vector<PartitionSpec> partitions_into(int m, int n);

// Visitor form of the above; used where materializing the list is wasteful.
void for_each_partition(int m, int n, const std::function<void(const PartitionSpec&)>& visit);

// Number of labeled graphs on m vertices: 2^(m(m-1)/2).
PowerOfTwoCount total_graph_count(int m);

// The nested cross-class sum (x2+...+xn)x1 + (x3+...+xn)x2 + ... + xn*x(n-1),
// checked against the identity C(m,2) - sum C(xi,2) before returning.
std::uint64_t cross_pair_exponent(const PartitionSpec& partition);

// Count of graphs for which a fixed class assignment with these sizes is a
// proper coloring: exactly 2^cross_pair_exponent.
PowerOfTwoCount partition_graph_count(const PartitionSpec& partition);

struct MaxPartitionCount {
    PowerOfTwoCount count;
    PartitionSpec argmax;  // always the balanced partition
};

// Maximum of partition_graph_count over partitions of m into n parts.
MaxPartitionCount max_partition_count(int m, int n);

struct CountBoundCheck {
    int y = 0;           // m - n
    bool holds = false;  // total >= 2^y * max  (always true)
    bool equality = false;
};

CountBoundCheck verify_count_bound(int m, int n);

struct UndetectedErrorBound {
    DyadicProbability exact;  // max count / total count
    DyadicProbability cap;    // 2^-(m-n)
};

UndetectedErrorBound undetected_probability_bound(int m, int n);

// Payload bits per check symbol: l/m = (m-1)/2, exactly.
Rational overhead_ratio(int m);

struct ChromaticSpectrum {
    int order = 0;
    std::vector<std::uint64_t> counts;  // counts[n-1] = #labeled graphs with chromatic number n

    std::uint64_t total() const;
};

// Brute-force census of every labeled graph of order m (m <= 7). The per-graph
// chromatic number comes from an independent-set cover DP, a route independent
// of the backtracking solver so the two can check each other.
ChromaticSpectrum chromatic_spectrum(int m);

// Chromatic number of every labeled graph of order m (m <= 6), indexed by the
// below-diagonal edge mask. Same DP route as chromatic_spectrum.
std::vector<std::uint8_t> chromatic_table(int m);

// Brute-force count of graphs properly colored by the canonical class
// assignment with the given sizes (first x1 vertices in class 0, and so on).
// Must equal partition_graph_count; m <= 6.
std::uint64_t partition_count_by_enumeration(int m, const PartitionSpec& partition);

}  // namespace gccd
