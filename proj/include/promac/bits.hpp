#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace promac {

/// Fixed-length bit string, MSB-first: bit 0 is the top bit of byte 0.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::size_t bits) : bits_(bits), bytes_((bits + 7) / 8, 0) {}

    /// Take the first `bits` bits of `bytes`.
    static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t bits);
    /// Parse "101101".
    static BitString from_binary(std::string_view text);
    static BitString ones(std::size_t bits);

    std::size_t size() const noexcept { return bits_; }
    bool empty() const noexcept { return bits_ == 0; }

    bool get(std::size_t i) const noexcept { return (bytes_[i / 8] >> (7 - i % 8)) & 1U; }
    void set(std::size_t i, bool v) noexcept {
        const auto mask = static_cast<std::uint8_t>(0x80U >> (i % 8));
        if (v) {
            bytes_[i / 8] |= mask;
        } else {
            bytes_[i / 8] &= static_cast<std::uint8_t>(~mask);
        }
    }
    void flip(std::size_t i) noexcept { bytes_[i / 8] ^= static_cast<std::uint8_t>(0x80U >> (i % 8)); }

    /// this ^= other. Sizes must match.
    BitString& operator^=(const BitString& other);

    /// Bits [offset, offset + count) as a new string.
    BitString slice(std::size_t offset, std::size_t count) const;

    /// Packed bytes, trailing pad bits zero.
    std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

    std::string to_binary() const;
    std::string to_hex() const;

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint8_t> bytes_;
};

using Bytes = std::vector<std::uint8_t>;

/// Throws ConfigError on odd length or non-hex characters.
Bytes hex_decode(std::string_view hex);
std::string hex_encode(std::span<const std::uint8_t> bytes);

}  // namespace promac
