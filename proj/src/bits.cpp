#include "promac/bits.hpp"

#include <algorithm>

#include "promac/errors.hpp"

namespace promac {

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bits) {
    if (bits > bytes.size() * 8) {
        throw ConfigError("bit string longer than its source bytes");
    }
    BitString out(bits);
    std::copy_n(bytes.begin(), out.bytes_.size(), out.bytes_.begin());
    if (bits % 8 != 0) {
        out.bytes_.back() &= static_cast<std::uint8_t>(0xFFU << (8 - bits % 8));
    }
    return out;
}

BitString BitString::from_binary(std::string_view text) {
    BitString out(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1') {
            throw ConfigError("binary string may only contain 0 and 1");
        }
        out.set(i, text[i] == '1');
    }
    return out;
}

BitString BitString::ones(std::size_t bits) {
    BitString out(bits);
    for (std::size_t i = 0; i < bits; ++i) {
        out.set(i, true);
    }
    return out;
}

BitString& BitString::operator^=(const BitString& other) {
    if (other.bits_ != bits_) {
        throw ConfigError("xor of bit strings with different lengths");
    }
    for (std::size_t i = 0; i < bytes_.size(); ++i) {
        bytes_[i] ^= other.bytes_[i];
    }
    return *this;
}

BitString BitString::slice(std::size_t offset, std::size_t count) const {
    if (offset + count > bits_) {
        throw ConfigError("bit slice out of range");
    }
    BitString out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.set(i, get(offset + i));
    }
    return out;
}

std::string BitString::to_binary() const {
    std::string s(bits_, '0');
    for (std::size_t i = 0; i < bits_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

std::string BitString::to_hex() const { return hex_encode(bytes_); }

Bytes hex_decode(std::string_view hex) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    if (hex.size() % 2 != 0) {
        throw ConfigError("hex string has odd length");
    }
    Bytes out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int hi = nibble(hex[2 * i]);
        const int lo = nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) {
            throw ConfigError("invalid hex character");
        }
        out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
    }
    return out;
}

std::string hex_encode(std::span<const std::uint8_t> bytes) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
        s.push_back(kDigits[b >> 4]);
        s.push_back(kDigits[b & 0x0F]);
    }
    return s;
}

}  // namespace promac
