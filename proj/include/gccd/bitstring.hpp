#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gccd {

// Ordered sequence of payload bits with an explicit length. Position 0 is the
// first serialized below-diagonal entry. No implicit leading or trailing bits.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<std::uint8_t> bits);

    // Parses a literal like "0110". Throws std::invalid_argument on other chars.
    static BitString from_string(std::string_view text);

    // Unpacks bit_count bits from an MSB-first byte stream. Bytes beyond the
    // needed ceil(bit_count/8) are ignored by the caller's choice of span.
    static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count);

    // Fixed-width big-endian rendering of an unsigned value. Throws if the
    // value does not fit in bit_count bits.
    static BitString from_unsigned(std::uint64_t value, std::size_t bit_count);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    int bit(std::size_t pos) const;
    void set_bit(std::size_t pos, int value);
    void flip_bit(std::size_t pos);
    void append(int value);

    std::string to_string() const;

    // MSB-first packing; unused bits of the final byte are zero.
    std::vector<std::uint8_t> to_bytes() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;  // each entry 0 or 1
};

}  // namespace gccd
