#pragma once

// Receiver side: recompute tags, verify whatever has become verifiable and
// keep per-message accrued bit security.

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "promac/layout.hpp"
#include "promac/maccore.hpp"
#include "promac/schemes.hpp"

namespace promac {

enum class BitVerdict : std::uint8_t { Pending, Verified, Mismatch, Lost };

struct MessageStatus {
    std::uint64_t seq = 0;
    bool lost = false;
    bool suspect = false;  ///< some covering tag bit mismatched
    int accrued = 0;       ///< verified matching bits, capped at security_bits
};

struct VerificationReport {
    std::uint64_t seq = 0;
    bool packet = false;  ///< false for an explicit loss event
    /// Seqs skipped before this event, all treated as lost.
    std::uint64_t inferred_loss_first = 0;
    std::uint64_t inferred_loss_count = 0;
    /// One verdict per tag bit of this packet (empty for losses).
    std::vector<BitVerdict> verdicts;
    int matched_bits = 0;
    int mismatched_bits = 0;
    /// Messages that left the retention horizon; their accrual is final.
    std::vector<MessageStatus> finalized;
};

/// Verifies one stream. Events must arrive in strictly increasing seq
/// order starting at 0; gaps count as losses.
class ReceiverLedger {
public:
    ReceiverLedger(SchemeConfig config, const Key& key, MacSuite suite = MacSuite::standard());

    /// Throws ProtocolError on a repeated or older seq or a tag of the wrong
    /// length.
    VerificationReport receive(const Packet& packet);
    /// Marks `seq` as known missing.
    VerificationReport lose(std::uint64_t seq);
    /// Finalizes every retained message, as if the stream ended here.
    std::vector<MessageStatus> finish();

    /// Status of a message still inside the retention horizon.
    std::optional<MessageStatus> status(std::uint64_t seq) const;

    std::uint64_t next_seq() const noexcept { return next_seq_; }
    const SchemeConfig& config() const noexcept { return config_; }
    const DependencyLayout& layout() const noexcept { return layout_; }

private:
    struct Entry {
        std::uint64_t seq = 0;
        bool lost = false;
        bool suspect = false;
        int accrued = 0;
        Bytes payload;
        BitString sigma;
        Digest substate{};
    };

    void skip_to(std::uint64_t seq, VerificationReport& report);
    void push_lost(std::uint64_t seq, VerificationReport& report);
    void evict(VerificationReport& report);
    const Entry* find(std::int64_t seq) const;
    Entry* find(std::int64_t seq);
    bool is_lost(std::int64_t seq) const;
    BitString expected_unit(std::size_t unit, std::int64_t seq) const;
    MessageStatus to_status(const Entry& e) const;

    SchemeConfig config_;
    Key key_;
    MacSuite suite_;
    DependencyLayout layout_;
    std::vector<std::vector<int>> index_;
    std::size_t horizon_;
    std::deque<Entry> entries_;  // consecutive seqs ending at next_seq_ - 1
    std::uint64_t next_seq_ = 0;
};

}  // namespace promac
