#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gccd/counting.hpp"
#include "gccd/rng.hpp"
#include "gccd/scheme.hpp"

namespace gccd {

// Error-injection models. Seeded kinds replay the same corruption sequence
// for the same seed.
struct FlipPositions {
    std::vector<std::size_t> positions;  // distinct, each < payload length
};

struct FlipRandom {
    std::size_t count = 0;  // flips exactly this many distinct positions
    std::uint64_t seed = 0;
};

struct BernoulliFlip {
    double rate = 0.0;  // per-bit flip probability
    std::uint64_t seed = 0;
};

// The analysis model: a uniform draw over all payloads differing from the
// original.
struct UniformReplacement {
    std::uint64_t seed = 0;
};

using ChannelModel = std::variant<FlipPositions, FlipRandom, BernoulliFlip, UniformReplacement>;

BitString corrupt(const BitString& payload, const ChannelModel& model);

// Deterministic core used by the Monte Carlo driver, which supplies a
// per-trial stream in place of the model's own seed.
BitString corrupt_with(const BitString& payload, const ChannelModel& model, SplitMix64& rng);

struct StageTally {
    std::uint64_t malformed = 0;
    std::uint64_t improper_coloring = 0;
    std::uint64_t chromatic_drop = 0;

    std::uint64_t total() const { return malformed + improper_coloring + chromatic_drop; }
    friend bool operator==(const StageTally&, const StageTally&) = default;
};

struct ExperimentReport {
    std::uint64_t trials = 0;
    StageTally detected_by_stage;
    std::uint64_t undetected = 0;          // accepted although the payload changed
    std::uint64_t accepted_identity = 0;   // channel returned the payload unchanged
    double p_hat = 0.0;                    // undetected / trials
    double stderr_binomial = 0.0;
    DyadicProbability p1_exact;            // from the counting module
    DyadicProbability bound_2_to_minus_y;  // 2^-(m-n)
    std::uint64_t detection_exponent = 0;  // payload cells joining same-colored vertices
    bool model_mismatch = false;           // message carries padding, so the
                                           // uniform-over-graphs analysis does not map 1:1

    std::string to_json() const;
    static std::string csv_header();
    std::string to_csv_row() const;

    friend bool operator==(const ExperimentReport&, const ExperimentReport&) = default;
};

// Per-trial corruption + verification. Trial randomness is derived from
// (model seed, trial index), so the report is independent of execution order.
ExperimentReport run_monte_carlo(const CheckedMessage& message, const ChannelModel& model,
                                 std::uint64_t trials, int order_guard = kDefaultOrderGuard);

struct ExhaustiveStats {
    std::uint64_t candidates = 0;  // 2^l - 1 corrupted payloads
    StageTally detected_by_stage;
    std::uint64_t undetected = 0;
    Rational p_hat_exact;
    DyadicProbability p1_exact;
    DyadicProbability bound_2_to_minus_y;
    std::uint64_t detection_exponent = 0;
    bool model_mismatch = false;

    std::string to_json() const;
    static std::string csv_header();
    std::string to_csv_row() const;
};

// Enumerates every corrupted payload (payload length <= 20) and verifies each.
ExhaustiveStats exhaustive_sweep(const CheckedMessage& message,
                                 int order_guard = kDefaultOrderGuard);

// Number of payload cells whose endpoints share a color under the message's
// coloring; 2^-(that) is the operative per-message detection bound.
std::uint64_t detection_exponent(const CheckedMessage& message);

}  // namespace gccd
