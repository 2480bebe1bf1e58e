#include "gccd/bitstring.hpp"

#include <stdexcept>

namespace gccd {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) throw std::invalid_argument("BitString: entries must be 0 or 1");
    }
}

BitString BitString::from_string(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitString::from_string: invalid character '" +
                                        std::string(1, c) + "'");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BitString(std::move(bits));
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_count) {
    if (bytes.size() * 8 < bit_count) {
        throw std::invalid_argument("BitString::from_bytes: byte stream too short");
    }
    std::vector<std::uint8_t> bits(bit_count);
    for (std::size_t i = 0; i < bit_count; ++i) {
        bits[i] = (bytes[i / 8] >> (7 - i % 8)) & 1;
    }
    return BitString(std::move(bits));
}

BitString BitString::from_unsigned(std::uint64_t value, std::size_t bit_count) {
    if (bit_count < 64 && bit_count > 0 && (value >> bit_count) != 0) {
        throw std::invalid_argument("BitString::from_unsigned: value does not fit declared length");
    }
    if (bit_count == 0 && value != 0) {
        throw std::invalid_argument("BitString::from_unsigned: value does not fit declared length");
    }
    std::vector<std::uint8_t> bits(bit_count);
    for (std::size_t i = 0; i < bit_count && i < 64; ++i) {
        bits[bit_count - 1 - i] = static_cast<std::uint8_t>((value >> i) & 1);
    }
    return BitString(std::move(bits));
}

int BitString::bit(std::size_t pos) const {
    if (pos >= bits_.size()) throw std::out_of_range("BitString::bit: position out of range");
    return bits_[pos];
}

void BitString::set_bit(std::size_t pos, int value) {
    if (pos >= bits_.size()) throw std::out_of_range("BitString::set_bit: position out of range");
    if (value != 0 && value != 1) throw std::invalid_argument("BitString::set_bit: bit must be 0 or 1");
    bits_[pos] = static_cast<std::uint8_t>(value);
}

void BitString::flip_bit(std::size_t pos) {
    if (pos >= bits_.size()) throw std::out_of_range("BitString::flip_bit: position out of range");
    bits_[pos] ^= 1;
}

void BitString::append(int value) {
    if (value != 0 && value != 1) throw std::invalid_argument("BitString::append: bit must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(value));
}

std::string BitString::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
    return out;
}

std::vector<std::uint8_t> BitString::to_bytes() const {
    std::vector<std::uint8_t> bytes((bits_.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) bytes[i / 8] |= static_cast<std::uint8_t>(1u << (7 - i % 8));
    }
    return bytes;
}

}  // namespace gccd
