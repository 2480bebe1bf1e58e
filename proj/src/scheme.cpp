#include "gccd/scheme.hpp"

#include <cstring>
#include <optional>

namespace gccd {

const char* stage_name(DetectionStage stage) {
    switch (stage) {
        case DetectionStage::malformed: return "malformed";
        case DetectionStage::improper_coloring: return "improper_coloring";
        case DetectionStage::chromatic_drop: return "chromatic_drop";
    }
    return "unknown";
}

const char* wire_error_name(WireError code) {
    switch (code) {
        case WireError::bad_magic: return "bad_magic";
        case WireError::bad_version: return "bad_version";
        case WireError::bad_header: return "bad_header";
        case WireError::color_out_of_range: return "color_out_of_range";
        case WireError::length_mismatch: return "length_mismatch";
        case WireError::trailing_garbage: return "trailing_garbage";
    }
    return "unknown";
}

WireFormatError::WireFormatError(WireError code, const std::string& detail)
    : std::runtime_error(std::string(wire_error_name(code)) + ": " + detail), code_(code) {}

namespace {

// Structural validity shared by verify's first stage and the wire boundary.
// Color-entry ranges are deliberately not part of it: an out-of-palette entry
// is an improper coloring, which is the second stage's verdict to give.
std::optional<std::string> structural_flaw(const CheckedMessage& message) {
    if (message.payload.empty()) return "empty payload";
    ExtensionPlan rebuilt;
    try {
        rebuilt = make_plan(message.payload.size(), message.plan.mode, message.plan.pin_size);
    } catch (const std::invalid_argument& e) {
        return std::string(e.what());
    }
    if (!(rebuilt == message.plan)) return "extension plan does not match the payload";
    if (message.colors.colors.size() != static_cast<std::size_t>(message.plan.total_order)) {
        return "coloring covers " + std::to_string(message.colors.colors.size()) + " of " +
               std::to_string(message.plan.total_order) + " vertices";
    }
    if (message.chromatic < 1) return "claimed palette is empty";
    if (message.chromatic > message.plan.total_order) {
        return "claimed palette exceeds the vertex count";
    }
    if (message.colors.palette != message.chromatic) {
        return "coloring palette disagrees with the claimed chromatic number";
    }
    return std::nullopt;
}

}  // namespace

CheckedMessage encode(const BitString& payload, PaddingMode mode, int pin_size, int order_guard) {
    const ExtensionPlan plan = make_plan(payload.size(), mode, pin_size);
    const Graph graph = bits_to_graph(payload, plan);
    ChromaticCertificate cert = chromatic_certificate(graph, order_guard);
    CheckedMessage message;
    message.payload = payload;
    message.plan = plan;
    message.chromatic = static_cast<std::uint16_t>(cert.chromatic);
    message.colors = std::move(cert.witness);
    return message;
}

VerificationOutcome verify(const CheckedMessage& message, int order_guard) {
    if (structural_flaw(message)) return VerificationOutcome::reject(DetectionStage::malformed);
    const Graph graph = bits_to_graph(message.payload, message.plan);
    if (!is_proper(graph, message.colors)) {
        return VerificationOutcome::reject(DetectionStage::improper_coloring);
    }
    if (k_colorable(graph, message.chromatic - 1, order_guard)) {
        return VerificationOutcome::reject(DetectionStage::chromatic_drop);
    }
    return VerificationOutcome::accept();
}

namespace {

constexpr std::uint8_t kMagic[4] = {'G', 'C', 'C', 'D'};
constexpr std::uint8_t kVersion = 1;
constexpr std::size_t kHeaderSize = 4 + 1 + 1 + 2 + 2 + 2 + 8;

void push_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v & 0xFF));
}

void push_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) {
        out.push_back(static_cast<std::uint8_t>((v >> shift) & 0xFF));
    }
}

class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::size_t remaining() const { return bytes_.size() - offset_; }

    const std::uint8_t* take(std::size_t count, const char* what) {
        if (remaining() < count) {
            throw WireFormatError(WireError::length_mismatch,
                                  std::string("stream ends inside ") + what);
        }
        const std::uint8_t* p = bytes_.data() + offset_;
        offset_ += count;
        return p;
    }

    std::uint8_t u8(const char* what) { return *take(1, what); }

    std::uint16_t u16(const char* what) {
        const std::uint8_t* p = take(2, what);
        return static_cast<std::uint16_t>((p[0] << 8) | p[1]);
    }

    std::uint64_t u64(const char* what) {
        const std::uint8_t* p = take(8, what);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | p[i];
        return v;
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t offset_ = 0;
};

}  // namespace

std::vector<std::uint8_t> serialize_message(const CheckedMessage& message) {
    if (auto flaw = structural_flaw(message)) {
        throw std::invalid_argument("cannot serialize: " + *flaw);
    }
    for (std::size_t v = 0; v < message.colors.colors.size(); ++v) {
        if (message.colors.colors[v] >= message.chromatic) {
            throw std::invalid_argument("cannot serialize: color of vertex " +
                                        std::to_string(v + 1) + " is outside the palette");
        }
    }
    const auto payload_bytes = message.payload.to_bytes();
    std::vector<std::uint8_t> out;
    out.reserve(kHeaderSize + 2 * message.colors.colors.size() + payload_bytes.size());
    for (std::uint8_t b : kMagic) out.push_back(b);
    out.push_back(kVersion);
    out.push_back(static_cast<std::uint8_t>(message.plan.mode));
    push_u16(out, static_cast<std::uint16_t>(message.plan.total_order));
    push_u16(out, message.chromatic);
    push_u16(out, static_cast<std::uint16_t>(message.plan.pin_size));
    push_u64(out, message.payload.size());
    for (auto color : message.colors.colors) push_u16(out, color);
    out.insert(out.end(), payload_bytes.begin(), payload_bytes.end());
    return out;
}

CheckedMessage parse_message(std::span<const std::uint8_t> bytes) {
    ByteReader reader(bytes);
    const std::uint8_t* magic = reader.take(4, "the magic");
    if (std::memcmp(magic, kMagic, 4) != 0) {
        throw WireFormatError(WireError::bad_magic, "stream does not start with GCCD");
    }
    const std::uint8_t version = reader.u8("the version");
    if (version != kVersion) {
        throw WireFormatError(WireError::bad_version,
                              "unsupported version " + std::to_string(version));
    }
    const std::uint8_t mode_byte = reader.u8("the padding mode");
    if (mode_byte > 1) {
        throw WireFormatError(WireError::bad_header,
                              "unknown padding mode " + std::to_string(mode_byte));
    }
    const auto mode = static_cast<PaddingMode>(mode_byte);
    const std::uint16_t order = reader.u16("the order");
    const std::uint16_t chromatic = reader.u16("the chromatic number");
    const std::uint16_t pin_size = reader.u16("the pin size");
    const std::uint64_t bit_len = reader.u64("the payload length");
    if (bit_len == 0) {
        throw WireFormatError(WireError::bad_header, "payload length is zero");
    }
    if (bit_len > 8 * static_cast<std::uint64_t>(bytes.size())) {
        throw WireFormatError(WireError::length_mismatch,
                              "declared payload length exceeds the stream");
    }
    ExtensionPlan plan;
    try {
        plan = make_plan(bit_len, mode, pin_size);
    } catch (const std::invalid_argument& e) {
        throw WireFormatError(WireError::bad_header, e.what());
    }
    if (plan.total_order != order) {
        throw WireFormatError(WireError::bad_header,
                              "order field " + std::to_string(order) + " does not match the " +
                                  std::to_string(plan.total_order) + " implied by the payload");
    }
    if (chromatic < 1 || chromatic > order) {
        throw WireFormatError(WireError::bad_header,
                              "chromatic field " + std::to_string(chromatic) + " is outside [1, " +
                                  std::to_string(order) + "]");
    }
    Coloring colors;
    colors.palette = chromatic;
    colors.colors.reserve(order);
    for (int v = 1; v <= order; ++v) {
        const std::uint16_t c = reader.u16("the color list");
        if (c >= chromatic) {
            throw WireFormatError(WireError::color_out_of_range,
                                  "vertex " + std::to_string(v) + " has color " +
                                      std::to_string(c) + ", palette holds " +
                                      std::to_string(chromatic));
        }
        colors.colors.push_back(c);
    }
    const std::size_t payload_byte_count = static_cast<std::size_t>((bit_len + 7) / 8);
    const std::uint8_t* payload_ptr = reader.take(payload_byte_count, "the payload");
    if (bit_len % 8 != 0) {
        const std::uint8_t tail_mask =
            static_cast<std::uint8_t>((1U << (8 - bit_len % 8)) - 1);
        if (payload_ptr[payload_byte_count - 1] & tail_mask) {
            throw WireFormatError(WireError::trailing_garbage,
                                  "unused bits of the final payload byte are set");
        }
    }
    if (reader.remaining() != 0) {
        throw WireFormatError(WireError::trailing_garbage,
                              std::to_string(reader.remaining()) + " bytes after the payload");
    }
    CheckedMessage message;
    message.payload = BitString::from_bytes({payload_ptr, payload_byte_count},
                                            static_cast<std::size_t>(bit_len));
    message.plan = plan;
    message.chromatic = chromatic;
    message.colors = std::move(colors);
    return message;
}

}  // namespace gccd
