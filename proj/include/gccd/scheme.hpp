#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gccd/codec.hpp"
#include "gccd/coloring.hpp"

namespace gccd {

// The transmitted pair {payload, coloring} plus the header fields needed to
// rebuild the extended graph on the receiving side.
struct CheckedMessage {
    BitString payload;
    ExtensionPlan plan;
    std::uint16_t chromatic = 0;  // palette size of the minimal coloring
    Coloring colors;              // covers all plan.total_order vertices

    friend bool operator==(const CheckedMessage&, const CheckedMessage&) = default;
};

enum class DetectionStage : std::uint8_t {
    malformed,          // structurally invalid message
    improper_coloring,  // stored coloring clashes on the rebuilt graph
    chromatic_drop,     // rebuilt graph colorable with one color fewer
};

struct VerificationOutcome {
    bool accepted = false;
    std::optional<DetectionStage> stage;  // set iff not accepted

    static VerificationOutcome accept() { return {true, std::nullopt}; }
    static VerificationOutcome reject(DetectionStage s) { return {false, s}; }

    friend bool operator==(const VerificationOutcome&, const VerificationOutcome&) = default;
};

const char* stage_name(DetectionStage stage);

// Builds {payload, minimal coloring} for transmission. Throws
// std::invalid_argument for an empty payload, OrderGuardError past the guard.
CheckedMessage encode(const BitString& payload, PaddingMode mode = PaddingMode::zero_fill,
                      int pin_size = 0, int order_guard = kDefaultOrderGuard);

// The receiving side: rebuild the graph from the (possibly corrupted) payload
// with regenerated padding, then test the stored coloring and the one-fewer
// palette. Acceptance means the two-stage test passed, not proven equality.
VerificationOutcome verify(const CheckedMessage& message, int order_guard = kDefaultOrderGuard);

enum class WireError : std::uint8_t {
    bad_magic,
    bad_version,
    bad_header,  // field range or plan-consistency violation
    color_out_of_range,
    length_mismatch,
    trailing_garbage,
};

const char* wire_error_name(WireError code);

class WireFormatError : public std::runtime_error {
public:
    WireFormatError(WireError code, const std::string& detail);
    WireError code() const { return code_; }

private:
    WireError code_;
};

// Wire format, big-endian throughout:
//   magic "GCCD" | version u8 = 1 | mode u8 | order u16 | chromatic u16 |
//   pin_size u16 | payload_bit_len u64 | colors order x u16 |
//   payload ceil(l/8) bytes, MSB-first, bit 0 = first triangle cell,
//   unused trailing bits zero.
std::vector<std::uint8_t> serialize_message(const CheckedMessage& message);

// Parses and validates structure: magic, version, field ranges, plan
// consistency, exact length, zero tail bits. Throws WireFormatError.
CheckedMessage parse_message(std::span<const std::uint8_t> bytes);

}  // namespace gccd
