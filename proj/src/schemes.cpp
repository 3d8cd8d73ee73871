#include "promac/schemes.hpp"

#include <algorithm>

#include "promac/errors.hpp"

namespace promac {

std::string_view scheme_kind_name(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::SpMac: return "spmac";
        case SchemeKind::Whips: return "whips";
        case SchemeKind::CuMac: return "cumac";
        case SchemeKind::MiniMac: return "minimac";
        case SchemeKind::Truncated: return "truncated";
    }
    return "unknown";
}

SchemeKind parse_scheme_kind(std::string_view name) {
    for (auto kind : {SchemeKind::SpMac, SchemeKind::Whips, SchemeKind::CuMac, SchemeKind::MiniMac,
                      SchemeKind::Truncated}) {
        if (scheme_kind_name(kind) == name) return kind;
    }
    throw ConfigError("unknown scheme '" + std::string(name) + "'");
}

SchemeConfig SchemeConfig::spmac(const DependencyProfile& profile) {
    return spmac(profile.bit_deps, profile.security_bits);
}

SchemeConfig SchemeConfig::spmac(BitDependencies deps, int security_bits) {
    SchemeConfig c;
    c.kind = SchemeKind::SpMac;
    c.tag_bits = static_cast<int>(deps.size());
    c.security_bits = security_bits;
    c.bit_deps = std::move(deps);
    c.validate();
    return c;
}

SchemeConfig SchemeConfig::whips(int tag_bits, int security_bits) {
    SchemeConfig c{SchemeKind::Whips, tag_bits, security_bits, {}, 0};
    c.validate();
    return c;
}

SchemeConfig SchemeConfig::cumac(int tag_bits, int security_bits) {
    SchemeConfig c{SchemeKind::CuMac, tag_bits, security_bits, {}, 0};
    c.validate();
    return c;
}

SchemeConfig SchemeConfig::minimac(int tag_bits, int window, int security_bits) {
    SchemeConfig c{SchemeKind::MiniMac, tag_bits, security_bits, {}, window};
    c.validate();
    return c;
}

SchemeConfig SchemeConfig::truncated(int tag_bits, int security_bits) {
    SchemeConfig c{SchemeKind::Truncated, tag_bits, security_bits, {}, 0};
    c.validate();
    return c;
}

void SchemeConfig::validate() const {
    if (tag_bits < 1) throw ConfigError("tag_bits must be positive");
    if (security_bits < 1 || security_bits > 256) throw ConfigError("security_bits must be in 1..256");
    if (tag_bits > security_bits) throw ConfigError("tag_bits must not exceed security_bits");
    if (window < 0) throw ConfigError("window must be non-negative");
    switch (kind) {
        case SchemeKind::SpMac:
            if (static_cast<int>(bit_deps.size()) != tag_bits) {
                throw ConfigError("SP-MAC needs one dependency set per tag bit");
            }
            (void)fragment_indices(bit_deps, security_bits);
            break;
        case SchemeKind::CuMac:
            if (security_bits % tag_bits != 0) {
                throw ConfigError("CuMAC needs security_bits divisible by tag_bits");
            }
            break;
        default:
            break;
    }
}

int SchemeConfig::window_n() const {
    return window > 0 ? window : window_size(security_bits, tag_bits);
}

DependencyLayout SchemeConfig::layout() const {
    switch (kind) {
        case SchemeKind::SpMac: return DependencyLayout::from_bits(bit_deps);
        case SchemeKind::Truncated: return DependencyLayout::truncated(tag_bits);
        default: return DependencyLayout::window(window_n(), tag_bits);
    }
}

std::vector<std::vector<int>> fragment_indices(const BitDependencies& deps, int security_bits) {
    std::vector<std::vector<int>> index(deps.size());
    int max_order = 0;
    for (const auto& d : deps) max_order = std::max(max_order, d.order());
    int next = 0;
    for (int n = 0; n < max_order; ++n) {
        for (std::size_t j = 0; j < deps.size(); ++j) {
            if (n < deps[j].order()) index[j].push_back(next++);
        }
    }
    if (next > security_bits) {
        throw ConfigError("dependency orders sum to " + std::to_string(next) + " > security_bits " +
                          std::to_string(security_bits));
    }
    return index;
}

// ---------------------------------------------------------------------------
// SP-MAC

SpMacSigner::SpMacSigner(const Key& key, BitDependencies deps, int security_bits, MacSuite suite)
    : key_(key),
      deps_(std::move(deps)),
      security_bits_(security_bits),
      tag_bits_(static_cast<int>(deps_.size())),
      suite_(std::move(suite)) {
    SchemeConfig::spmac(deps_, security_bits_);
    index_ = fragment_indices(deps_, security_bits_);
    const auto depth = static_cast<std::size_t>(profile_max_delay(deps_) + 1);
    ring_.assign(depth, BitString(static_cast<std::size_t>(tag_bits_)));
    fills_.assign(depth, std::vector<std::uint16_t>(static_cast<std::size_t>(tag_bits_), 0));
}

SpMacSigner::SpMacSigner(const Key& key, const DependencyProfile& profile, MacSuite suite)
    : SpMacSigner(key, profile.bit_deps, profile.security_bits, std::move(suite)) {}

void SpMacSigner::preprocess() {
    const auto depth = ring_.size();
    while (!pending_.empty()) {
        const auto& [seq, sigma] = pending_.front();
        for (std::size_t j = 0; j < deps_.size(); ++j) {
            const auto& d = deps_[j];
            for (int n = 1; n < d.order(); ++n) {
                const auto slot = static_cast<std::size_t>((seq + static_cast<std::uint64_t>(d[static_cast<std::size_t>(n)])) % depth);
                if (sigma.get(static_cast<std::size_t>(index_[j][static_cast<std::size_t>(n)]))) {
                    ring_[slot].flip(j);
                }
                ++fills_[slot][j];
                ++counters_.preprocess_bits;
            }
        }
        ++counters_.preprocess_folds;
        pending_.pop_front();
    }
}

Packet SpMacSigner::sign(std::span<const std::uint8_t> payload) {
    if (payload.size() > kMaxPayload) throw ConfigError("payload exceeds 65535 bytes");
    preprocess();
    const std::uint64_t seq = next_seq_;
    BitString sigma = suite_.sigma(key_, seq, payload, security_bits_);
    const auto slot = static_cast<std::size_t>(seq % ring_.size());

    // Part 0 of every bit sits at sigma[j] under either addressing.
    ring_[slot] ^= sigma.slice(0, static_cast<std::size_t>(tag_bits_));
    ++counters_.online_folds;

    for (std::size_t j = 0; j < deps_.size(); ++j) {
        int expected = 1;
        for (int n = 1; n < deps_[j].order(); ++n) {
            if (static_cast<std::uint64_t>(deps_[j][static_cast<std::size_t>(n)]) <= seq) ++expected;
        }
        if (fills_[slot][j] + 1 != expected) {
            throw std::logic_error("SP-MAC accumulator missed a contribution");
        }
    }

    Packet packet{seq, Bytes(payload.begin(), payload.end()), std::move(ring_[slot])};
    ring_[slot] = BitString(static_cast<std::size_t>(tag_bits_));
    std::fill(fills_[slot].begin(), fills_[slot].end(), 0);
    pending_.emplace_back(seq, std::move(sigma));
    ++next_seq_;
    return packet;
}

std::vector<BitString> transform_transcript(std::span<const BitString> sigmas, const BitDependencies& deps) {
    if (deps.empty()) throw ConfigError("no dependency sets");
    for (const auto& s : sigmas) {
        if (s.size() != sigmas.front().size()) throw ConfigError("base tags differ in length");
    }
    const int security_bits = sigmas.empty() ? 256 : static_cast<int>(sigmas.front().size());
    const auto index = fragment_indices(deps, security_bits);
    std::vector<BitString> tags;
    tags.reserve(sigmas.size());
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        BitString tag(deps.size());
        for (std::size_t j = 0; j < deps.size(); ++j) {
            bool bit = false;
            for (int n = 0; n < deps[j].order(); ++n) {
                const auto d = static_cast<std::size_t>(deps[j][static_cast<std::size_t>(n)]);
                if (d > i) break;
                bit ^= sigmas[i - d].get(static_cast<std::size_t>(index[j][static_cast<std::size_t>(n)]));
            }
            tag.set(j, bit);
        }
        tags.push_back(std::move(tag));
    }
    return tags;
}

// ---------------------------------------------------------------------------
// Whips

namespace detail {

namespace {
void put_u64(Bytes& out, std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}
}  // namespace

Digest whips_substate(const MacSuite& suite, const Key& key, std::span<const std::uint8_t> payload) {
    Bytes msg;
    msg.reserve(payload.size() + 1);
    msg.push_back(0x01);
    msg.insert(msg.end(), payload.begin(), payload.end());
    return suite.keyed(key, msg);
}

BitString whips_tag(const MacSuite& suite, const Key& key, std::uint64_t counter,
                    std::span<const Digest> substates, int tag_bits) {
    Bytes msg;
    msg.reserve(9 + 32 * substates.size());
    msg.push_back(0x02);
    put_u64(msg, counter);
    for (const auto& s : substates) msg.insert(msg.end(), s.begin(), s.end());
    return BitString::from_bytes(suite.keyed(key, msg), static_cast<std::size_t>(tag_bits));
}

BitString minimac_tag(const MacSuite& suite, const Key& key, std::uint64_t counter,
                      std::span<const Bytes> payloads, int tag_bits) {
    Bytes msg;
    put_u64(msg, counter);
    for (const auto& p : payloads) {
        msg.push_back(static_cast<std::uint8_t>(p.size() >> 8));
        msg.push_back(static_cast<std::uint8_t>(p.size()));
        msg.insert(msg.end(), p.begin(), p.end());
    }
    return BitString::from_bytes(suite.keyed(key, msg), static_cast<std::size_t>(tag_bits));
}

}  // namespace detail

WhipsSigner::WhipsSigner(const Key& key, int tag_bits, int security_bits, MacSuite suite)
    : key_(key), tag_bits_(tag_bits), suite_(std::move(suite)) {
    n_ = SchemeConfig::whips(tag_bits, security_bits).window_n();
}

Packet WhipsSigner::sign(std::span<const std::uint8_t> payload) {
    if (payload.size() > kMaxPayload) throw ConfigError("payload exceeds 65535 bytes");
    substates_.push_back(detail::whips_substate(suite_, key_, payload));
    if (substates_.size() > static_cast<std::size_t>(n_)) substates_.pop_front();
    const std::vector<Digest> window(substates_.begin(), substates_.end());
    Packet packet{counter_, Bytes(payload.begin(), payload.end()),
                  detail::whips_tag(suite_, key_, counter_, window, tag_bits_)};
    ++counter_;
    return packet;
}

// ---------------------------------------------------------------------------
// CuMAC

CuMacSigner::CuMacSigner(const Key& key, int tag_bits, int security_bits, MacSuite suite)
    : key_(key), tag_bits_(tag_bits), security_bits_(security_bits), suite_(std::move(suite)) {
    n_ = SchemeConfig::cumac(tag_bits, security_bits).window_n();
}

Packet CuMacSigner::sign(std::span<const std::uint8_t> payload) {
    if (payload.size() > kMaxPayload) throw ConfigError("payload exceeds 65535 bytes");
    history_.push_front(suite_.sigma(key_, counter_, payload, security_bits_));
    if (history_.size() > static_cast<std::size_t>(n_)) history_.pop_back();
    BitString tag(static_cast<std::size_t>(tag_bits_));
    for (std::size_t k = 0; k < history_.size(); ++k) {
        tag ^= history_[k].slice(k * static_cast<std::size_t>(tag_bits_), static_cast<std::size_t>(tag_bits_));
    }
    Packet packet{counter_, Bytes(payload.begin(), payload.end()), std::move(tag)};
    ++counter_;
    return packet;
}

// ---------------------------------------------------------------------------
// Mini-MAC

MiniMacSigner::MiniMacSigner(const Key& key, int tag_bits, int window, MacSuite suite)
    : key_(key), tag_bits_(tag_bits), n_(window), suite_(std::move(suite)) {
    if (window < 1) throw ConfigError("Mini-MAC window must be positive");
    if (tag_bits < 1 || tag_bits > 256) throw ConfigError("tag_bits must be in 1..256");
}

Packet MiniMacSigner::sign(std::span<const std::uint8_t> payload) {
    if (payload.size() > kMaxPayload) throw ConfigError("payload exceeds 65535 bytes");
    history_.emplace_back(payload.begin(), payload.end());
    if (history_.size() > static_cast<std::size_t>(n_)) history_.pop_front();
    const std::vector<Bytes> window(history_.begin(), history_.end());
    Packet packet{counter_, history_.back(), detail::minimac_tag(suite_, key_, counter_, window, tag_bits_)};
    ++counter_;
    return packet;
}

// ---------------------------------------------------------------------------
// Truncated

TruncatedSigner::TruncatedSigner(const Key& key, int tag_bits, int security_bits, MacSuite suite)
    : key_(key), tag_bits_(tag_bits), security_bits_(security_bits), suite_(std::move(suite)) {
    SchemeConfig::truncated(tag_bits, security_bits);
}

Packet TruncatedSigner::sign(std::span<const std::uint8_t> payload) {
    if (payload.size() > kMaxPayload) throw ConfigError("payload exceeds 65535 bytes");
    const auto sigma = suite_.sigma(key_, counter_, payload, security_bits_);
    Packet packet{counter_, Bytes(payload.begin(), payload.end()),
                  sigma.slice(0, static_cast<std::size_t>(tag_bits_))};
    ++counter_;
    return packet;
}

Packet truncated_sign(const Key& key, const MessageRecord& record, int tag_bits, int security_bits) {
    if (tag_bits < 1 || tag_bits > security_bits) {
        throw ConfigError("tag_bits must be in 1..security_bits");
    }
    const auto sigma = base_mac(key, record, security_bits);
    return {record.seq, record.payload, sigma.slice(0, static_cast<std::size_t>(tag_bits))};
}

std::unique_ptr<Signer> make_signer(const SchemeConfig& config, const Key& key, MacSuite suite) {
    config.validate();
    switch (config.kind) {
        case SchemeKind::SpMac:
            return std::make_unique<SpMacSigner>(key, config.bit_deps, config.security_bits, std::move(suite));
        case SchemeKind::Whips:
            if (config.window_n() != window_size(config.security_bits, config.tag_bits)) {
                throw ConfigError("Whips window is fixed by security_bits / tag_bits");
            }
            return std::make_unique<WhipsSigner>(key, config.tag_bits, config.security_bits, std::move(suite));
        case SchemeKind::CuMac:
            if (config.window_n() != window_size(config.security_bits, config.tag_bits)) {
                throw ConfigError("CuMAC window is fixed by security_bits / tag_bits");
            }
            return std::make_unique<CuMacSigner>(key, config.tag_bits, config.security_bits, std::move(suite));
        case SchemeKind::MiniMac:
            return std::make_unique<MiniMacSigner>(key, config.tag_bits, config.window_n(), std::move(suite));
        case SchemeKind::Truncated:
            return std::make_unique<TruncatedSigner>(key, config.tag_bits, config.security_bits, std::move(suite));
    }
    throw ConfigError("unknown scheme");
}

}  // namespace promac
