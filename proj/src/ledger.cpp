#include "promac/ledger.hpp"

#include <algorithm>

#include "promac/errors.hpp"

namespace promac {

ReceiverLedger::ReceiverLedger(SchemeConfig config, const Key& key, MacSuite suite)
    : config_(std::move(config)), key_(key), suite_(std::move(suite)) {
    config_.validate();
    layout_ = config_.layout();
    if (config_.kind == SchemeKind::SpMac) {
        index_ = fragment_indices(config_.bit_deps, config_.security_bits);
    }
    horizon_ = static_cast<std::size_t>(layout_.max_delay());
}

const ReceiverLedger::Entry* ReceiverLedger::find(std::int64_t seq) const {
    if (seq < 0 || entries_.empty()) return nullptr;
    const auto first = static_cast<std::int64_t>(entries_.front().seq);
    const auto pos = seq - first;
    if (pos < 0 || pos >= static_cast<std::int64_t>(entries_.size())) return nullptr;
    return &entries_[static_cast<std::size_t>(pos)];
}

ReceiverLedger::Entry* ReceiverLedger::find(std::int64_t seq) {
    return const_cast<Entry*>(std::as_const(*this).find(seq));
}

bool ReceiverLedger::is_lost(std::int64_t seq) const {
    if (seq < 0) return false;
    const auto* e = find(seq);
    return e == nullptr || e->lost;
}

MessageStatus ReceiverLedger::to_status(const Entry& e) const {
    return {e.seq, e.lost, e.suspect, std::min(e.accrued, config_.security_bits)};
}

std::optional<MessageStatus> ReceiverLedger::status(std::uint64_t seq) const {
    if (seq > static_cast<std::uint64_t>(INT64_MAX)) return std::nullopt;
    const auto* e = find(static_cast<std::int64_t>(seq));
    if (e == nullptr) return std::nullopt;
    return to_status(*e);
}

void ReceiverLedger::evict(VerificationReport& report) {
    while (entries_.size() > horizon_) {
        report.finalized.push_back(to_status(entries_.front()));
        entries_.pop_front();
    }
}

void ReceiverLedger::push_lost(std::uint64_t seq, VerificationReport& report) {
    Entry e;
    e.seq = seq;
    e.lost = true;
    entries_.push_back(std::move(e));
    next_seq_ = seq + 1;
    evict(report);
}

void ReceiverLedger::skip_to(std::uint64_t seq, VerificationReport& report) {
    if (seq < next_seq_) {
        throw ProtocolError("seq " + std::to_string(seq) + " is not after " +
                            std::to_string(next_seq_ == 0 ? 0 : next_seq_ - 1));
    }
    if (seq == next_seq_) return;
    report.inferred_loss_first = next_seq_;
    report.inferred_loss_count = seq - next_seq_;
    std::uint64_t from = next_seq_;
    if (seq - from > horizon_ + 1) {
        // Only the last `horizon_` skipped seqs can matter to later tags.
        const auto saved = horizon_;
        horizon_ = 0;
        evict(report);
        horizon_ = saved;
        from = seq - horizon_;
    }
    for (std::uint64_t s = from; s < seq; ++s) push_lost(s, report);
}

BitString ReceiverLedger::expected_unit(std::size_t unit, std::int64_t s) const {
    const auto tag_bits = static_cast<std::size_t>(config_.tag_bits);
    switch (config_.kind) {
        case SchemeKind::SpMac: {
            const auto& d = config_.bit_deps[unit];
            BitString bit(1);
            for (int n = 0; n < d.order(); ++n) {
                const auto* e = find(s - d[static_cast<std::size_t>(n)]);
                if (e == nullptr) continue;
                if (e->sigma.get(static_cast<std::size_t>(index_[unit][static_cast<std::size_t>(n)]))) bit.flip(0);
            }
            return bit;
        }
        case SchemeKind::CuMac: {
            BitString tag(tag_bits);
            for (int k = 0; k < config_.window_n(); ++k) {
                const auto* e = find(s - k);
                if (e == nullptr) continue;
                tag ^= e->sigma.slice(static_cast<std::size_t>(k) * tag_bits, tag_bits);
            }
            return tag;
        }
        case SchemeKind::Truncated:
            return find(s)->sigma.slice(0, tag_bits);
        case SchemeKind::Whips: {
            std::vector<Digest> window;
            for (std::int64_t q = std::max<std::int64_t>(0, s - config_.window_n() + 1); q <= s; ++q) {
                window.push_back(find(q)->substate);
            }
            return detail::whips_tag(suite_, key_, static_cast<std::uint64_t>(s), window, config_.tag_bits);
        }
        case SchemeKind::MiniMac: {
            std::vector<Bytes> window;
            for (std::int64_t q = std::max<std::int64_t>(0, s - config_.window_n() + 1); q <= s; ++q) {
                window.push_back(find(q)->payload);
            }
            return detail::minimac_tag(suite_, key_, static_cast<std::uint64_t>(s), window, config_.tag_bits);
        }
    }
    throw ConfigError("unknown scheme");
}

VerificationReport ReceiverLedger::receive(const Packet& packet) {
    if (packet.tag.size() != static_cast<std::size_t>(config_.tag_bits)) {
        throw ProtocolError("tag has " + std::to_string(packet.tag.size()) + " bits, expected " +
                            std::to_string(config_.tag_bits));
    }
    if (packet.payload.size() > kMaxPayload) throw ProtocolError("payload exceeds 65535 bytes");
    if (packet.seq > static_cast<std::uint64_t>(INT64_MAX)) throw ProtocolError("seq out of range");
    VerificationReport report;
    report.seq = packet.seq;
    report.packet = true;
    skip_to(packet.seq, report);

    Entry entry;
    entry.seq = packet.seq;
    switch (config_.kind) {
        case SchemeKind::Whips:
            entry.substate = detail::whips_substate(suite_, key_, packet.payload);
            break;
        case SchemeKind::MiniMac:
            entry.payload = packet.payload;
            break;
        default:
            entry.sigma = suite_.sigma(key_, packet.seq, packet.payload, config_.security_bits);
            break;
    }
    entries_.push_back(std::move(entry));
    next_seq_ = packet.seq + 1;

    const auto s = static_cast<std::int64_t>(packet.seq);
    std::size_t bit_offset = 0;
    report.verdicts.assign(static_cast<std::size_t>(config_.tag_bits), BitVerdict::Pending);
    const auto units = layout_.units();
    for (std::size_t u = 0; u < units.size(); ++u) {
        const auto& unit = units[u];
        const auto width = static_cast<std::size_t>(unit.width);
        const bool verifiable = std::none_of(unit.offsets.begin(), unit.offsets.end(),
                                             [&](int d) { return is_lost(s - d); });
        BitVerdict verdict = BitVerdict::Lost;
        if (verifiable) {
            const bool match = expected_unit(u, s) == packet.tag.slice(bit_offset, width);
            verdict = match ? BitVerdict::Verified : BitVerdict::Mismatch;
            for (int d : unit.offsets) {
                if (auto* e = find(s - d)) {
                    if (match) {
                        e->accrued += unit.width;
                    } else {
                        e->suspect = true;
                    }
                }
            }
            (match ? report.matched_bits : report.mismatched_bits) += unit.width;
        }
        std::fill_n(report.verdicts.begin() + static_cast<std::ptrdiff_t>(bit_offset), width, verdict);
        bit_offset += width;
    }
    evict(report);
    return report;
}

VerificationReport ReceiverLedger::lose(std::uint64_t seq) {
    VerificationReport report;
    report.seq = seq;
    skip_to(seq, report);
    push_lost(seq, report);
    return report;
}

std::vector<MessageStatus> ReceiverLedger::finish() {
    std::vector<MessageStatus> out;
    for (const auto& e : entries_) out.push_back(to_status(e));
    entries_.clear();
    return out;
}

}  // namespace promac
