#pragma once

// Streaming signers for SP-MAC, Whips, CuMAC, Mini-MAC and truncated MACs.

#include <cstdint>
#include <deque>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "promac/bits.hpp"
#include "promac/depsets.hpp"
#include "promac/layout.hpp"
#include "promac/maccore.hpp"

namespace promac {

struct Packet {
    std::uint64_t seq = 0;
    Bytes payload;
    BitString tag;

    friend bool operator==(const Packet&, const Packet&) = default;
};

enum class SchemeKind { SpMac, Whips, CuMac, MiniMac, Truncated };

std::string_view scheme_kind_name(SchemeKind kind);
/// Accepts "spmac", "whips", "cumac", "minimac", "truncated".
SchemeKind parse_scheme_kind(std::string_view name);

/// Everything both ends of a stream agree on besides the key.
struct SchemeConfig {
    SchemeKind kind = SchemeKind::SpMac;
    int tag_bits = 0;
    int security_bits = 128;
    BitDependencies bit_deps;  ///< SP-MAC only
    int window = 0;            ///< Whips/CuMAC/Mini-MAC; 0 means ceil(security/tag)

    static SchemeConfig spmac(const DependencyProfile& profile);
    static SchemeConfig spmac(BitDependencies deps, int security_bits);
    static SchemeConfig whips(int tag_bits, int security_bits = 128);
    static SchemeConfig cumac(int tag_bits, int security_bits = 128);
    static SchemeConfig minimac(int tag_bits, int window, int security_bits = 128);
    static SchemeConfig truncated(int tag_bits, int security_bits = 128);

    /// Throws ConfigError naming the violated precondition.
    void validate() const;
    int window_n() const;
    DependencyLayout layout() const;
    int max_delay() const { return layout().max_delay(); }
};

/// Position in sigma of the n-th contribution to tag bit j, for every (j, n).
///
/// Pairs (n, j) with n < order(D_j) are numbered in (n, j) order; with equal
/// orders this is n * tag_bits + j. Throws ConfigError when sigma is too
/// short for all contributions.
std::vector<std::vector<int>> fragment_indices(const BitDependencies& deps, int security_bits);

class Signer {
public:
    virtual ~Signer() = default;
    virtual Packet sign(std::span<const std::uint8_t> payload) = 0;
    virtual std::uint64_t next_seq() const = 0;
};

std::unique_ptr<Signer> make_signer(const SchemeConfig& config, const Key& key,
                                    MacSuite suite = MacSuite::standard());

struct SpMacCounters {
    std::uint64_t online_folds = 0;      ///< tag_bits-wide folds done while signing
    std::uint64_t preprocess_folds = 0;  ///< base tags folded into future slots
    std::uint64_t preprocess_bits = 0;   ///< single-bit contributions in those folds
};

/// SP-MAC sender. Tag i bit j is the XOR over n < |D_j| of
/// sigma_{i - D_j[n]} at fragment_indices[j][n]; history before seq 0 is zero.
///
/// sign() computes sigma_i, folds its part 0 into the accumulator of tag i
/// and emits it. Contributions of sigma_i to later tags are folded by
/// preprocess(), which sign() runs first if the caller has not.
class SpMacSigner final : public Signer {
public:
    SpMacSigner(const Key& key, BitDependencies deps, int security_bits,
                MacSuite suite = MacSuite::standard());
    SpMacSigner(const Key& key, const DependencyProfile& profile, MacSuite suite = MacSuite::standard());

    Packet sign(std::span<const std::uint8_t> payload) override;
    void preprocess();
    bool has_pending() const noexcept { return !pending_.empty(); }

    std::uint64_t next_seq() const override { return next_seq_; }
    int ring_depth() const noexcept { return static_cast<int>(ring_.size()); }
    const SpMacCounters& counters() const noexcept { return counters_; }

private:
    Key key_;
    BitDependencies deps_;
    int security_bits_;
    int tag_bits_;
    MacSuite suite_;
    std::vector<std::vector<int>> index_;
    std::vector<BitString> ring_;
    std::vector<std::vector<std::uint16_t>> fills_;
    std::deque<std::pair<std::uint64_t, BitString>> pending_;
    std::uint64_t next_seq_ = 0;
    SpMacCounters counters_;
};

/// Whips: substate_i = HMAC(0x01 || m_i); tag_i = HMAC(0x02 || c || the
/// last n substates oldest first), truncated.
class WhipsSigner final : public Signer {
public:
    WhipsSigner(const Key& key, int tag_bits, int security_bits = 128,
                MacSuite suite = MacSuite::standard());

    Packet sign(std::span<const std::uint8_t> payload) override;
    std::uint64_t next_seq() const override { return counter_; }
    std::size_t substate_count() const noexcept { return substates_.size(); }
    int window() const noexcept { return n_; }

private:
    Key key_;
    int tag_bits_;
    int n_;
    MacSuite suite_;
    std::deque<Digest> substates_;
    std::uint64_t counter_ = 0;
};

/// CuMAC: sigma_i split into n fragments of tag_bits; tag_i is the XOR of
/// fragment k of sigma_{i-k} for k < n.
class CuMacSigner final : public Signer {
public:
    CuMacSigner(const Key& key, int tag_bits, int security_bits = 128,
                MacSuite suite = MacSuite::standard());

    Packet sign(std::span<const std::uint8_t> payload) override;
    std::uint64_t next_seq() const override { return counter_; }
    int window() const noexcept { return n_; }

private:
    Key key_;
    int tag_bits_;
    int security_bits_;
    int n_;
    MacSuite suite_;
    std::deque<BitString> history_;  // newest first
    std::uint64_t counter_ = 0;
};

/// Mini-MAC: tag_i = HMAC(c || framed m_{i-n+1} .. m_i), truncated. Each
/// message is framed by its 2-byte big-endian length.
class MiniMacSigner final : public Signer {
public:
    MiniMacSigner(const Key& key, int tag_bits, int window, MacSuite suite = MacSuite::standard());

    Packet sign(std::span<const std::uint8_t> payload) override;
    std::uint64_t next_seq() const override { return counter_; }
    int window() const noexcept { return n_; }

private:
    Key key_;
    int tag_bits_;
    int n_;
    MacSuite suite_;
    std::deque<Bytes> history_;
    std::uint64_t counter_ = 0;
};

class TruncatedSigner final : public Signer {
public:
    TruncatedSigner(const Key& key, int tag_bits, int security_bits = 128,
                    MacSuite suite = MacSuite::standard());

    Packet sign(std::span<const std::uint8_t> payload) override;
    std::uint64_t next_seq() const override { return counter_; }

private:
    Key key_;
    int tag_bits_;
    int security_bits_;
    MacSuite suite_;
    std::uint64_t counter_ = 0;
};

/// First tag_bits bits of base_mac(key, record).
Packet truncated_sign(const Key& key, const MessageRecord& record, int tag_bits, int security_bits = 128);

/// SP-MAC tags as a public function of the plain base tags sigma_0, sigma_1, ...
std::vector<BitString> transform_transcript(std::span<const BitString> sigmas, const BitDependencies& deps);

namespace detail {
Digest whips_substate(const MacSuite& suite, const Key& key, std::span<const std::uint8_t> payload);
BitString whips_tag(const MacSuite& suite, const Key& key, std::uint64_t counter,
                    std::span<const Digest> substates, int tag_bits);
BitString minimac_tag(const MacSuite& suite, const Key& key, std::uint64_t counter,
                      std::span<const Bytes> payloads, int tag_bits);
}  // namespace detail

}  // namespace promac
