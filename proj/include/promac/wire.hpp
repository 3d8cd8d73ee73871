#pragma once

// Packet wire format: seq (8 bytes BE) || payload length (2 bytes BE) ||
// payload || tag packed MSB-first, zero-padded to a whole byte.

#include <cstdint>
#include <span>

#include "promac/schemes.hpp"

namespace promac {

Bytes encode_packet(const Packet& packet);

/// Throws ProtocolError on truncated or oversized input and on non-zero
/// padding bits.
Packet decode_packet(std::span<const std::uint8_t> wire, int tag_bits);

}  // namespace promac
