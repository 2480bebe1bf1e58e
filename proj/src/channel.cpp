#include "gccd/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace gccd {

namespace {

std::uint64_t model_seed(const ChannelModel& model) {
    return std::visit(
        [](const auto& m) -> std::uint64_t {
            if constexpr (requires { m.seed; }) {
                return m.seed;
            } else {
                return 0;
            }
        },
        model);
}

BitString apply_flip_positions(const BitString& payload, const FlipPositions& model) {
    std::vector<std::size_t> sorted = model.positions;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("flip positions must be distinct");
    }
    BitString out = payload;
    for (std::size_t pos : model.positions) {
        if (pos >= payload.size()) {
            throw std::invalid_argument("flip position " + std::to_string(pos) +
                                        " is outside the payload of length " +
                                        std::to_string(payload.size()));
        }
        out.flip_bit(pos);
    }
    return out;
}

BitString apply_flip_random(const BitString& payload, const FlipRandom& model, SplitMix64& rng) {
    if (model.count > payload.size()) {
        throw std::invalid_argument("cannot flip " + std::to_string(model.count) +
                                    " distinct positions in a payload of length " +
                                    std::to_string(payload.size()));
    }
    std::vector<std::size_t> index(payload.size());
    std::iota(index.begin(), index.end(), std::size_t{0});
    BitString out = payload;
    for (std::size_t j = 0; j < model.count; ++j) {
        const std::size_t pick = j + rng.below(index.size() - j);
        std::swap(index[j], index[pick]);
        out.flip_bit(index[j]);
    }
    return out;
}

BitString apply_bernoulli(const BitString& payload, const BernoulliFlip& model, SplitMix64& rng) {
    if (!(model.rate >= 0.0 && model.rate <= 1.0)) {
        throw std::invalid_argument("flip rate must lie in [0, 1]");
    }
    BitString out = payload;
    for (std::size_t pos = 0; pos < payload.size(); ++pos) {
        if (rng.bernoulli(model.rate)) out.flip_bit(pos);
    }
    return out;
}

BitString apply_uniform_replacement(const BitString& payload, SplitMix64& rng) {
    BitString candidate;
    do {
        candidate = BitString();
        for (std::size_t pos = 0; pos < payload.size(); ++pos) candidate.append(rng.bit());
    } while (candidate == payload);
    return candidate;
}

bool has_padding(const ExtensionPlan& plan) {
    return plan.mode == PaddingMode::clique_pin ||
           triangle_size(plan.total_order) != plan.payload_len;
}

// A payload-only channel can never repair a structurally broken message, so
// an experiment on one would just count `malformed` once per trial.
void require_structure(const CheckedMessage& message, int order_guard, const char* caller) {
    const VerificationOutcome base = verify(message, order_guard);
    if (!base.accepted && base.stage == DetectionStage::malformed) {
        throw std::invalid_argument(std::string(caller) +
                                    " requires a structurally valid message");
    }
}

nlohmann::ordered_json tally_json(const StageTally& tally) {
    return nlohmann::ordered_json{{"malformed", tally.malformed},
                                  {"improper_coloring", tally.improper_coloring},
                                  {"chromatic_drop", tally.chromatic_drop}};
}

std::string double_repr(double v) { return nlohmann::json(v).dump(); }

}  // namespace

BitString corrupt_with(const BitString& payload, const ChannelModel& model, SplitMix64& rng) {
    if (payload.empty()) throw std::invalid_argument("cannot corrupt an empty payload");
    return std::visit(
        [&](const auto& m) -> BitString {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, FlipPositions>) {
                return apply_flip_positions(payload, m);
            } else if constexpr (std::is_same_v<M, FlipRandom>) {
                return apply_flip_random(payload, m, rng);
            } else if constexpr (std::is_same_v<M, BernoulliFlip>) {
                return apply_bernoulli(payload, m, rng);
            } else {
                return apply_uniform_replacement(payload, rng);
            }
        },
        model);
}

BitString corrupt(const BitString& payload, const ChannelModel& model) {
    SplitMix64 rng = stream_for(model_seed(model), 0);
    return corrupt_with(payload, model, rng);
}

std::uint64_t detection_exponent(const CheckedMessage& message) {
    std::uint64_t same = 0;
    for (std::size_t t = 0; t < message.payload.size(); ++t) {
        const auto pos = triangle_pair(t, message.plan.total_order);
        if (message.colors.color_of(pos.row) == message.colors.color_of(pos.col)) ++same;
    }
    return same;
}

ExperimentReport run_monte_carlo(const CheckedMessage& message, const ChannelModel& model,
                                 std::uint64_t trials, int order_guard) {
    if (trials == 0) throw std::invalid_argument("at least one trial is required");
    require_structure(message, order_guard, "run_monte_carlo");
    ExperimentReport report;
    report.trials = trials;
    const std::uint64_t seed = model_seed(model);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 rng = stream_for(seed, trial);
        CheckedMessage probe = message;
        probe.payload = corrupt_with(message.payload, model, rng);
        const VerificationOutcome outcome = verify(probe, order_guard);
        if (outcome.accepted) {
            if (probe.payload == message.payload) {
                ++report.accepted_identity;
            } else {
                ++report.undetected;
            }
        } else {
            switch (*outcome.stage) {
                case DetectionStage::malformed: ++report.detected_by_stage.malformed; break;
                case DetectionStage::improper_coloring:
                    ++report.detected_by_stage.improper_coloring;
                    break;
                case DetectionStage::chromatic_drop:
                    ++report.detected_by_stage.chromatic_drop;
                    break;
            }
        }
    }
    report.p_hat = static_cast<double>(report.undetected) / static_cast<double>(trials);
    report.stderr_binomial =
        std::sqrt(report.p_hat * (1.0 - report.p_hat) / static_cast<double>(trials));
    const auto bound = undetected_probability_bound(message.plan.total_order, message.chromatic);
    report.p1_exact = bound.exact;
    report.bound_2_to_minus_y = bound.cap;
    report.detection_exponent = detection_exponent(message);
    report.model_mismatch = has_padding(message.plan);
    return report;
}

ExhaustiveStats exhaustive_sweep(const CheckedMessage& message, int order_guard) {
    const std::size_t l = message.payload.size();
    if (l > 20) {
        throw std::invalid_argument("exhaustive sweep is limited to payloads of 20 bits");
    }
    require_structure(message, order_guard, "exhaustive_sweep");
    ExhaustiveStats stats;
    stats.candidates = (std::uint64_t{1} << l) - 1;
    for (std::uint64_t delta = 1; delta <= stats.candidates; ++delta) {
        CheckedMessage probe = message;
        for (std::size_t t = 0; t < l; ++t) {
            if ((delta >> t) & 1) probe.payload.flip_bit(t);
        }
        const VerificationOutcome outcome = verify(probe, order_guard);
        if (outcome.accepted) {
            ++stats.undetected;
        } else {
            switch (*outcome.stage) {
                case DetectionStage::malformed: ++stats.detected_by_stage.malformed; break;
                case DetectionStage::improper_coloring:
                    ++stats.detected_by_stage.improper_coloring;
                    break;
                case DetectionStage::chromatic_drop:
                    ++stats.detected_by_stage.chromatic_drop;
                    break;
            }
        }
    }
    stats.p_hat_exact = make_rational(stats.undetected, stats.candidates);
    const auto bound = undetected_probability_bound(message.plan.total_order, message.chromatic);
    stats.p1_exact = bound.exact;
    stats.bound_2_to_minus_y = bound.cap;
    stats.detection_exponent = detection_exponent(message);
    stats.model_mismatch = has_padding(message.plan);
    if (!stats.model_mismatch) {
        const std::uint64_t y = bound.cap.neg_exponent;
        if (y < 64 && stats.undetected * (std::uint64_t{1} << y) > stats.candidates) {
            throw std::logic_error("exhaustive sweep exceeded the 2^-(m-n) bound");
        }
    }
    return stats;
}

std::string ExperimentReport::to_json() const {
    nlohmann::ordered_json j{{"trials", trials},
                             {"detected_by_stage", tally_json(detected_by_stage)},
                             {"undetected", undetected},
                             {"accepted_identity", accepted_identity},
                             {"p_hat", p_hat},
                             {"stderr", stderr_binomial},
                             {"p1_exact", p1_exact.repr()},
                             {"bound_2_to_minus_y", bound_2_to_minus_y.repr()},
                             {"detection_exponent", detection_exponent},
                             {"model_mismatch", model_mismatch}};
    return j.dump();
}

std::string ExperimentReport::csv_header() {
    return "trials,malformed,improper_coloring,chromatic_drop,undetected,accepted_identity,"
           "p_hat,stderr,p1_exact,bound_2_to_minus_y,detection_exponent,model_mismatch";
}

std::string ExperimentReport::to_csv_row() const {
    std::string row;
    row += std::to_string(trials) + ',';
    row += std::to_string(detected_by_stage.malformed) + ',';
    row += std::to_string(detected_by_stage.improper_coloring) + ',';
    row += std::to_string(detected_by_stage.chromatic_drop) + ',';
    row += std::to_string(undetected) + ',';
    row += std::to_string(accepted_identity) + ',';
    row += double_repr(p_hat) + ',';
    row += double_repr(stderr_binomial) + ',';
    row += p1_exact.repr() + ',';
    row += bound_2_to_minus_y.repr() + ',';
    row += std::to_string(detection_exponent) + ',';
    row += model_mismatch ? "true" : "false";
    return row;
}

std::string ExhaustiveStats::to_json() const {
    nlohmann::ordered_json j{{"candidates", candidates},
                             {"detected_by_stage", tally_json(detected_by_stage)},
                             {"undetected", undetected},
                             {"p_hat_exact", p_hat_exact.repr()},
                             {"p1_exact", p1_exact.repr()},
                             {"bound_2_to_minus_y", bound_2_to_minus_y.repr()},
                             {"detection_exponent", detection_exponent},
                             {"model_mismatch", model_mismatch}};
    return j.dump();
}

std::string ExhaustiveStats::csv_header() {
    return "candidates,malformed,improper_coloring,chromatic_drop,undetected,"
           "p_hat_exact,p1_exact,bound_2_to_minus_y,detection_exponent,model_mismatch";
}

std::string ExhaustiveStats::to_csv_row() const {
    std::string row;
    row += std::to_string(candidates) + ',';
    row += std::to_string(detected_by_stage.malformed) + ',';
    row += std::to_string(detected_by_stage.improper_coloring) + ',';
    row += std::to_string(detected_by_stage.chromatic_drop) + ',';
    row += std::to_string(undetected) + ',';
    row += p_hat_exact.repr() + ',';
    row += p1_exact.repr() + ',';
    row += bound_2_to_minus_y.repr() + ',';
    row += std::to_string(detection_exponent) + ',';
    row += model_mismatch ? "true" : "false";
    return row;
}

}  // namespace gccd
