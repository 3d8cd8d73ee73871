#pragma once

// Underlying full-strength MAC and bit-addressable fragments of it.

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>

#include "promac/bits.hpp"

namespace promac {

/// Pre-shared secret, 16 to 64 bytes.
class Key {
public:
    explicit Key(Bytes bytes);
    static Key from_hex(std::string_view hex) { return Key(hex_decode(hex)); }

    std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
    std::size_t size() const noexcept { return bytes_.size(); }

private:
    Bytes bytes_;
};

inline constexpr std::size_t kMaxPayload = 65535;

struct MessageRecord {
    std::uint64_t seq = 0;
    Bytes payload;
};

using Digest = std::array<std::uint8_t, 32>;

Digest hmac_sha256(std::span<const std::uint8_t> key, std::span<const std::uint8_t> message);

/// 8-byte big-endian seq followed by the payload.
Bytes encode_mac_input(std::uint64_t seq, std::span<const std::uint8_t> payload);

/// HMAC-SHA-256 over encode_mac_input(seq, payload), truncated MSB-first to
/// security_bits (1..256).
BitString base_mac(const Key& key, const MessageRecord& record, int security_bits = 128);

/// Bit `bit` of part `part` of sigma, i.e. sigma[part * tag_bits + bit].
/// Throws ConfigError when the address falls outside sigma.
bool fragment_bit(const BitString& sigma, int part, int bit, int tag_bits);

/// Invocation counters filled in by an instrumented MacSuite.
struct MacCounters {
    std::uint64_t hash_calls = 0;    ///< keyed-hash (HMAC) invocations
    std::uint64_t hashed_bytes = 0;  ///< bytes fed to the keyed hash
    std::uint64_t base_calls = 0;    ///< sigma computations
};

using KeyedHashFn = std::function<Digest(const Key&, std::span<const std::uint8_t>)>;
using BaseMacFn = std::function<BitString(const Key&, std::uint64_t seq,
                                          std::span<const std::uint8_t> payload, int security_bits)>;

/// The MAC primitives a scheme runs on. Either function may be replaced by a
/// stub in tests; an empty `base` derives sigma from `hash`.
struct MacSuite {
    KeyedHashFn hash;
    BaseMacFn base;
    MacCounters* counters = nullptr;

    static MacSuite standard();
    /// sigma_i = all ones if seq is odd, all zeros otherwise.
    static MacSuite parity_stub();
    /// sigma_i = all zeros.
    static MacSuite zero_stub();

    Digest keyed(const Key& key, std::span<const std::uint8_t> message) const;
    BitString sigma(const Key& key, std::uint64_t seq, std::span<const std::uint8_t> payload,
                    int security_bits) const;
};

}  // namespace promac
