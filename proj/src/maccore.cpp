#include "promac/maccore.hpp"

#include <openssl/evp.h>
#include <openssl/hmac.h>

#include <string>

#include "promac/errors.hpp"

namespace promac {

Key::Key(Bytes bytes) : bytes_(std::move(bytes)) {
    if (bytes_.size() < 16 || bytes_.size() > 64) {
        throw ConfigError("key must be 16 to 64 bytes, got " + std::to_string(bytes_.size()));
    }
}

Digest hmac_sha256(std::span<const std::uint8_t> key, std::span<const std::uint8_t> message) {
    Digest out{};
    unsigned int len = 0;
    // HMAC() accepts a null data pointer only for zero-length input.
    static constexpr std::uint8_t kEmpty = 0;
    const auto* data = message.empty() ? &kEmpty : message.data();
    if (HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()), data, message.size(),
             out.data(), &len) == nullptr ||
        len != out.size()) {
        throw Error("HMAC-SHA-256 failed");
    }
    return out;
}

Bytes encode_mac_input(std::uint64_t seq, std::span<const std::uint8_t> payload) {
    Bytes out;
    out.reserve(8 + payload.size());
    for (int shift = 56; shift >= 0; shift -= 8) {
        out.push_back(static_cast<std::uint8_t>(seq >> shift));
    }
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

namespace {

void check_security_bits(int security_bits) {
    if (security_bits < 1 || security_bits > 256) {
        throw ConfigError("security_bits must be in 1..256");
    }
}

}  // namespace

BitString base_mac(const Key& key, const MessageRecord& record, int security_bits) {
    check_security_bits(security_bits);
    if (record.payload.size() > kMaxPayload) {
        throw ConfigError("payload longer than 65535 bytes");
    }
    const auto digest = hmac_sha256(key.bytes(), encode_mac_input(record.seq, record.payload));
    return BitString::from_bytes(digest, static_cast<std::size_t>(security_bits));
}

bool fragment_bit(const BitString& sigma, int part, int bit, int tag_bits) {
    if (tag_bits < 1 || part < 0 || bit < 0 || bit >= tag_bits) {
        throw ConfigError("fragment address out of range");
    }
    const auto index = static_cast<std::size_t>(part) * static_cast<std::size_t>(tag_bits) +
                       static_cast<std::size_t>(bit);
    if (index >= sigma.size()) {
        throw ConfigError("fragment address beyond the base tag");
    }
    return sigma.get(index);
}

MacSuite MacSuite::standard() {
    MacSuite suite;
    suite.hash = [](const Key& key, std::span<const std::uint8_t> msg) {
        return hmac_sha256(key.bytes(), msg);
    };
    return suite;
}

MacSuite MacSuite::parity_stub() {
    MacSuite suite = standard();
    suite.base = [](const Key&, std::uint64_t seq, std::span<const std::uint8_t>, int bits) {
        return seq % 2 == 1 ? BitString::ones(static_cast<std::size_t>(bits))
                            : BitString(static_cast<std::size_t>(bits));
    };
    return suite;
}

MacSuite MacSuite::zero_stub() {
    MacSuite suite = standard();
    suite.base = [](const Key&, std::uint64_t, std::span<const std::uint8_t>, int bits) {
        return BitString(static_cast<std::size_t>(bits));
    };
    return suite;
}

Digest MacSuite::keyed(const Key& key, std::span<const std::uint8_t> message) const {
    if (counters != nullptr) {
        ++counters->hash_calls;
        counters->hashed_bytes += message.size();
    }
    return hash ? hash(key, message) : hmac_sha256(key.bytes(), message);
}

BitString MacSuite::sigma(const Key& key, std::uint64_t seq, std::span<const std::uint8_t> payload,
                          int security_bits) const {
    check_security_bits(security_bits);
    if (counters != nullptr) {
        ++counters->base_calls;
    }
    if (base) {
        return base(key, seq, payload, security_bits);
    }
    const auto digest = keyed(key, encode_mac_input(seq, payload));
    return BitString::from_bytes(digest, static_cast<std::size_t>(security_bits));
}

}  // namespace promac
