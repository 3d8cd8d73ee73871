#include <doctest.h>

#include <algorithm>
#include <map>
#include <optional>
#include <random>

#include "promac/errors.hpp"
#include "promac/ledger.hpp"

using namespace promac;

namespace {

const Key kKey = Key::from_hex("00112233445566778899aabbccddeeff");

std::map<std::uint64_t, MessageStatus> run_stream(const SchemeConfig& config, const std::vector<std::uint8_t>& lost,
                                                  bool explicit_losses = false) {
    auto signer = make_signer(config, kKey);
    ReceiverLedger ledger(config, kKey);
    std::map<std::uint64_t, MessageStatus> out;
    auto collect = [&](const std::vector<MessageStatus>& done) {
        for (const auto& s : done) out[s.seq] = s;
    };
    for (std::size_t i = 0; i < lost.size(); ++i) {
        const auto pkt = signer->sign(Bytes{static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(i >> 8)});
        if (lost[i] == 0) {
            collect(ledger.receive(pkt).finalized);
        } else if (explicit_losses) {
            collect(ledger.lose(pkt.seq).finalized);
        }
    }
    collect(ledger.finish());
    return out;
}

std::vector<SchemeConfig> configs() {
    ProfileSeed seed{};
    seed[1] = 3;
    return {
        SchemeConfig::whips(16),
        SchemeConfig::cumac(32),
        SchemeConfig::minimac(32, 4),
        SchemeConfig::truncated(16),
        SchemeConfig::spmac(uniform_dependencies(MarkSet({0, 1, 4, 6}), 32), 128),
        SchemeConfig::spmac(build_profile(16, 128, 2, 0, 16, seed)),
        SchemeConfig::spmac(build_profile(32, 128, 2, 16, 32, seed)),
    };
}

}  // namespace

TEST_CASE("ledger agrees with the structural accrual oracle") {
    std::mt19937_64 gen(11);
    for (const auto& config : configs()) {
        CAPTURE(std::string(scheme_kind_name(config.kind)));
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<std::uint8_t> lost(150);
            for (auto& l : lost) l = (gen() % 100) < static_cast<unsigned>(trial * 6) ? 1 : 0;
            const auto seen = run_stream(config, lost, trial % 2 == 1);
            const auto oracle = accrued_over_stream(config.layout(), lost);
            for (std::size_t i = 0; i < lost.size(); ++i) {
                if (lost[i] != 0) continue;
                const auto it = seen.find(i);
                REQUIRE(it != seen.end());
                CHECK(it->second.accrued == std::min(oracle[i], config.security_bits));
                CHECK_FALSE(it->second.suspect);
            }
        }
    }
}

TEST_CASE("lossless streams reach full security after max delay") {
    for (const auto& config : configs()) {
        auto signer = make_signer(config, kKey);
        ReceiverLedger ledger(config, kKey);
        const int d = config.max_delay();
        std::optional<MessageStatus> done;
        for (int i = 0; i <= d + 2; ++i) {
            for (const auto& s : ledger.receive(signer->sign(Bytes{1})).finalized) {
                if (s.seq == 2) done = s;
            }
        }
        REQUIRE(done);
        CHECK(done->accrued == (config.kind == SchemeKind::Truncated ? 16 : 128));
    }
}

TEST_CASE("sandwich voids every message between two close losses") {
    const int n = 8;
    const auto config = SchemeConfig::whips(16);
    for (int gap = 2; gap <= n; ++gap) {
        std::vector<std::uint8_t> lost(60, 0);
        const int a = 20;
        lost[a] = 1;
        lost[static_cast<std::size_t>(a + gap)] = 1;
        const auto seen = run_stream(config, lost);
        for (int i = a + 1; i < a + gap; ++i) CHECK(seen.at(static_cast<std::uint64_t>(i)).accrued == 0);
    }
}

TEST_CASE("a single loss leaves at least one window tag per message") {
    for (int pos = 0; pos < 30; ++pos) {
        std::vector<std::uint8_t> lost(30, 0);
        lost[static_cast<std::size_t>(pos)] = 1;
        const auto seen = run_stream(SchemeConfig::whips(16), lost);
        for (const auto& [seq, s] : seen) {
            if (seq + 8 <= 30 && !s.lost) CHECK(s.accrued >= 16);
        }
    }
}

TEST_CASE("single loss costs an SP-MAC message at most the per-drop loss") {
    ProfileSeed seed{};
    const auto config = SchemeConfig::spmac(build_profile(16, 128, 2, 0, 16, seed));
    const int horizon = config.max_delay();
    for (int pos = 40; pos < 40 + horizon; pos += 3) {
        std::vector<std::uint8_t> lost(static_cast<std::size_t>(pos + 2 * horizon + 2), 0);
        lost[static_cast<std::size_t>(pos)] = 1;
        const auto seen = run_stream(config, lost);
        for (int i = horizon; i <= pos + horizon; ++i) {
            if (i == pos) continue;
            CHECK(seen.at(static_cast<std::uint64_t>(i)).accrued >= 128 - 32);
        }
    }
}

TEST_CASE("tampered payloads are detected") {
    ProfileSeed seed{};
    const auto config = SchemeConfig::spmac(build_profile(16, 128, 2, 0, 16, seed));
    std::mt19937_64 gen(17);
    int eligible = 0;
    int detected = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        Key key(Bytes(32, static_cast<std::uint8_t>(trial)));
        auto signer = make_signer(config, key);
        ReceiverLedger ledger(config, key);
        const int target = 30 + static_cast<int>(gen() % 10);
        int mismatched = 0;
        int checked = 0;
        for (int i = 0; i < target + config.max_delay() + 1; ++i) {
            auto pkt = signer->sign(Bytes{static_cast<std::uint8_t>(i), 0x55});
            if (i == target) pkt.payload[gen() % 2] ^= static_cast<std::uint8_t>(1U << (gen() % 8));
            const auto report = ledger.receive(pkt);
            if (i >= target) {
                mismatched += report.mismatched_bits;
                checked += report.matched_bits + report.mismatched_bits;
            }
        }
        if (checked < 10) continue;
        ++eligible;
        if (mismatched > 0) ++detected;
    }
    CHECK(eligible >= 1000);
    CHECK(detected >= 999);
}

TEST_CASE("accrual never decreases") {
    ProfileSeed seed{};
    const auto config = SchemeConfig::spmac(build_profile(8, 128, 4, 0, 8, seed));
    auto signer = make_signer(config, kKey);
    ReceiverLedger ledger(config, kKey);
    std::mt19937_64 gen(4);
    std::map<std::uint64_t, int> last;
    for (int i = 0; i < 200; ++i) {
        const auto pkt = signer->sign(Bytes{static_cast<std::uint8_t>(i)});
        if (gen() % 10 == 0) continue;
        ledger.receive(pkt);
        for (std::uint64_t s = pkt.seq > 40 ? pkt.seq - 40 : 0; s <= pkt.seq; ++s) {
            if (const auto st = ledger.status(s)) {
                CHECK(st->accrued >= last[s]);
                last[s] = st->accrued;
            }
        }
    }
}

TEST_CASE("ledger rejects out-of-order and malformed packets") {
    const auto config = SchemeConfig::whips(16);
    auto signer = make_signer(config, kKey);
    ReceiverLedger ledger(config, kKey);
    const auto p0 = signer->sign({});
    const auto p1 = signer->sign({});
    ledger.receive(p1);
    CHECK_THROWS_AS(ledger.receive(p0), ProtocolError);
    CHECK_THROWS_AS(ledger.receive(p1), ProtocolError);
    auto p2 = signer->sign({});
    p2.tag = BitString(15);
    CHECK_THROWS_AS(ledger.receive(p2), ProtocolError);
    const auto report = ledger.receive(signer->sign({}));
    CHECK(report.inferred_loss_count == 1);
    CHECK(report.inferred_loss_first == 2);
}
