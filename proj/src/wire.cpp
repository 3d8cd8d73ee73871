#include "promac/wire.hpp"

#include "promac/errors.hpp"

namespace promac {

Bytes encode_packet(const Packet& packet) {
    if (packet.payload.size() > kMaxPayload) throw ConfigError("payload exceeds 65535 bytes");
    Bytes out;
    out.reserve(10 + packet.payload.size() + packet.tag.bytes().size());
    for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(packet.seq >> shift));
    out.push_back(static_cast<std::uint8_t>(packet.payload.size() >> 8));
    out.push_back(static_cast<std::uint8_t>(packet.payload.size()));
    out.insert(out.end(), packet.payload.begin(), packet.payload.end());
    const auto tag = packet.tag.bytes();
    out.insert(out.end(), tag.begin(), tag.end());
    return out;
}

Packet decode_packet(std::span<const std::uint8_t> wire, int tag_bits) {
    if (tag_bits < 1) throw ConfigError("tag_bits must be positive");
    const std::size_t tag_bytes = (static_cast<std::size_t>(tag_bits) + 7) / 8;
    if (wire.size() < 10) throw ProtocolError("packet shorter than its header");
    Packet p;
    for (std::size_t i = 0; i < 8; ++i) p.seq = p.seq << 8 | wire[i];
    const std::size_t len = static_cast<std::size_t>(wire[8]) << 8 | wire[9];
    if (wire.size() != 10 + len + tag_bytes) {
        throw ProtocolError("packet length " + std::to_string(wire.size()) + " does not match header (" +
                            std::to_string(10 + len + tag_bytes) + ")");
    }
    p.payload.assign(wire.begin() + 10, wire.begin() + static_cast<std::ptrdiff_t>(10 + len));
    const auto tag = wire.subspan(10 + len);
    p.tag = BitString::from_bytes(tag, static_cast<std::size_t>(tag_bits));
    if (p.tag.bytes().back() != tag.back()) throw ProtocolError("non-zero tag padding");
    return p;
}

}  // namespace promac
