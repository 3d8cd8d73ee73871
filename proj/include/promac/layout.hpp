#pragma once

// Structural view of a scheme: which past messages each tag component
// depends on, and what a message's accrued security is under a loss pattern.

#include <bitset>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "promac/depsets.hpp"

namespace promac {

/// `width` tag bits verified together; tag i's unit depends on messages
/// i - d for every d in `offsets`.
struct TagUnit {
    int width = 1;
    MarkSet offsets;
};

class DependencyLayout {
public:
    DependencyLayout() = default;
    explicit DependencyLayout(std::vector<TagUnit> units);

    /// One single-bit unit per dependency set (SP-MAC / R2-D2).
    static DependencyLayout from_bits(const BitDependencies& deps);
    /// One tag_bits-wide unit over {0..n-1} (Whips, CuMAC, Mini-MAC).
    static DependencyLayout window(int n, int tag_bits);
    /// One tag_bits-wide unit over {0}.
    static DependencyLayout truncated(int tag_bits);

    std::span<const TagUnit> units() const noexcept { return units_; }
    int tag_bits() const noexcept { return tag_bits_; }
    /// Bits a message accrues once every covering unit verified.
    int full_security() const noexcept { return full_security_; }
    int max_delay() const noexcept { return max_delay_; }

private:
    std::vector<TagUnit> units_;
    int tag_bits_ = 0;
    int full_security_ = 0;
    int max_delay_ = 0;
};

/// Sliding-window size for a security level: ceil(security_bits / tag_bits).
int window_size(int security_bits, int tag_bits);

inline constexpr std::size_t kMaxCoverInstances = 256;
using InstanceMask = std::bitset<kMaxCoverInstances>;

/// The covering instances of one steady-state target message: every
/// (unit, d) pair with d in the unit's offsets, i.e. unit of tag target+d.
/// For each relative position r != 0, kills(r) holds the instances that a
/// loss of message target+r makes unverifiable.
class CoverMap {
public:
    explicit CoverMap(const DependencyLayout& layout);

    int instance_count() const noexcept { return static_cast<int>(weights_.size()); }
    int full_security() const noexcept { return full_; }
    int max_delay() const noexcept { return max_delay_; }

    /// Relative positions whose loss affects the target, ascending.
    std::span<const int> killers() const noexcept { return killers_; }
    const InstanceMask& kills(int rel) const;

    /// Accrued bits with the given instances unverifiable.
    int security(const InstanceMask& dead) const;
    /// Accrued bits after losing the given relative positions (0 excluded).
    int security_after(std::span<const int> dropped) const;

private:
    std::vector<int> weights_;
    bool uniform_ = true;
    int full_ = 0;
    int max_delay_ = 0;
    std::vector<InstanceMask> by_offset_;  // index rel + max_delay
    std::vector<int> killers_;
};

/// Accrued bits of every message 0..lost.size()-1 after all tags of the
/// stream have been processed. Messages before 0 count as received (zero
/// initialized history); tags beyond the stream end are never received.
std::vector<int> accrued_over_stream(const DependencyLayout& layout, std::span<const std::uint8_t> lost);

}  // namespace promac
