#include <doctest.h>

#include <algorithm>
#include <random>

#include "promac/errors.hpp"
#include "promac/schemes.hpp"
#include "promac/wire.hpp"

using namespace promac;

namespace {

const Key kKey = Key::from_hex("8f1e2d3c4b5a69788796a5b4c3d2e1f00112233445566778");

Bytes random_payload(std::mt19937_64& gen) {
    Bytes p(gen() % 24);
    for (auto& b : p) b = static_cast<std::uint8_t>(gen());
    return p;
}

// (n, j) pairs with n < order(D_j), ranked by (n, j).
std::vector<std::vector<int>> rank_fragments(const BitDependencies& deps) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = 0; j < static_cast<int>(deps.size()); ++j) {
        for (int n = 0; n < deps[static_cast<std::size_t>(j)].order(); ++n) pairs.emplace_back(n, j);
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<std::vector<int>> idx(deps.size());
    for (auto& row : idx) row.resize(0);
    for (std::size_t r = 0; r < pairs.size(); ++r) {
        auto& row = idx[static_cast<std::size_t>(pairs[r].second)];
        row.resize(static_cast<std::size_t>(pairs[r].first) + 1);
        row[static_cast<std::size_t>(pairs[r].first)] = static_cast<int>(r);
    }
    return idx;
}

BitString brute_tag(const std::vector<BitString>& sigmas, std::size_t i, const BitDependencies& deps) {
    const auto idx = rank_fragments(deps);
    BitString tag(deps.size());
    for (std::size_t j = 0; j < deps.size(); ++j) {
        bool bit = false;
        for (int n = 0; n < deps[j].order(); ++n) {
            const auto d = static_cast<std::size_t>(deps[j][static_cast<std::size_t>(n)]);
            if (d > i) continue;
            bit ^= sigmas[i - d].get(static_cast<std::size_t>(idx[j][static_cast<std::size_t>(n)]));
        }
        tag.set(j, bit);
    }
    return tag;
}

}  // namespace

TEST_CASE("fragment indices") {
    const auto uniform = uniform_dependencies(MarkSet({0, 1, 4, 6}), 32);
    const auto idx = fragment_indices(uniform, 128);
    CHECK(idx[5][2] == 2 * 32 + 5);
    ProfileSeed seed{};
    const auto mixed = build_profile(10, 128, 2, 0, 16, seed).bit_deps;
    CHECK(fragment_indices(mixed, 128) == rank_fragments(mixed));
    CHECK_THROWS_AS(fragment_indices(uniform, 64), ConfigError);
}

TEST_CASE("sp-mac stub example gives t5 = 00") {
    const BitDependencies deps{MarkSet({0, 1, 4}), MarkSet({0, 2, 3})};
    SpMacSigner signer(kKey, deps, 6, MacSuite::parity_stub());
    Packet last;
    for (int i = 0; i <= 5; ++i) last = signer.sign({});
    CHECK(last.seq == 5);
    CHECK(last.tag.to_binary() == "00");
}

TEST_CASE("sp-mac with zero stub emits zero tags") {
    SpMacSigner signer(kKey, uniform_dependencies(MarkSet({0, 1, 4, 6}), 32), 128, MacSuite::zero_stub());
    for (int i = 0; i < 20; ++i) CHECK(signer.sign(Bytes{1}).tag == BitString(32));
}

TEST_CASE("sp-mac matches brute-force recomputation") {
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 4; ++trial) {
        ProfileSeed seed{};
        seed[0] = static_cast<std::uint8_t>(trial);
        const int tag = trial % 2 == 0 ? 16 : 10;
        const auto profile = build_profile(tag, 128, 2, trial == 2 ? 4 : 0, 16, seed);
        SpMacSigner signer(kKey, profile);
        std::vector<BitString> sigmas;
        for (std::uint64_t i = 0; i < 400; ++i) {
            const auto payload = random_payload(gen);
            sigmas.push_back(base_mac(kKey, {i, payload}));
            if (i % 3 == 0) signer.preprocess();
            const auto pkt = signer.sign(payload);
            REQUIRE(pkt.tag == brute_tag(sigmas, i, profile.bit_deps));
        }
        const auto transformed = transform_transcript(sigmas, profile.bit_deps);
        CHECK(transformed.back() == brute_tag(sigmas, sigmas.size() - 1, profile.bit_deps));
    }
}

TEST_CASE("sp-mac online cost is one base call and one fold") {
    MacCounters mac;
    auto suite = MacSuite::standard();
    suite.counters = &mac;
    SpMacSigner signer(kKey, uniform_dependencies(MarkSet({0, 1, 4, 6}), 32), 128, suite);
    for (int i = 0; i < 10; ++i) {
        signer.preprocess();
        CHECK_FALSE(signer.has_pending());
        const auto calls = mac.base_calls;
        const auto folds = signer.counters().online_folds;
        const auto pre = signer.counters().preprocess_folds;
        signer.sign(Bytes{static_cast<std::uint8_t>(i)});
        CHECK(mac.base_calls == calls + 1);
        CHECK(signer.counters().online_folds == folds + 1);
        CHECK(signer.counters().preprocess_folds == pre);
        CHECK(signer.has_pending());
    }
    CHECK(signer.ring_depth() == 7);
}

TEST_CASE("cumac stub and equivalence with the window profile") {
    CuMacSigner stub(kKey, 64, 128, MacSuite::parity_stub());
    Packet t;
    for (int i = 0; i <= 3; ++i) t = stub.sign({});
    CHECK(t.tag == BitString::ones(64));

    CuMacSigner zero(kKey, 32, 128, MacSuite::zero_stub());
    CHECK(zero.sign({}).tag == BitString(32));

    std::mt19937_64 gen(5);
    for (int tag : {8, 16, 32, 64}) {
        CuMacSigner cumac(kKey, tag);
        SpMacSigner spmac(kKey, uniform_dependencies(MarkSet::window(128 / tag), tag), 128);
        for (int i = 0; i < 300; ++i) {
            const auto payload = random_payload(gen);
            REQUIRE(cumac.sign(payload) == spmac.sign(payload));
        }
    }
    CHECK_THROWS_AS(CuMacSigner(kKey, 10), ConfigError);
}

TEST_CASE("whips state and dependence") {
    WhipsSigner w(kKey, 64);
    CHECK(w.window() == 2);
    w.sign(Bytes{1});
    w.sign(Bytes{2});
    w.sign(Bytes{3});
    CHECK(w.substate_count() == 2);

    const int n = 8;
    auto run = [&](std::uint8_t first) {
        WhipsSigner s(kKey, 16);
        Packet last;
        for (int i = 0; i < 20; ++i) {
            Bytes payload{static_cast<std::uint8_t>(i)};
            if (i == 20 - n) payload[0] = first;
            last = s.sign(payload);
        }
        return last.tag;
    };
    CHECK(run(100) == run(100));
    CHECK(run(100) != run(101));

    MacCounters mac;
    auto suite = MacSuite::standard();
    suite.counters = &mac;
    WhipsSigner counted(kKey, 16, 128, suite);
    counted.sign(Bytes{1, 2});
    CHECK(mac.hash_calls == 2);
}

TEST_CASE("mini-mac framing and window") {
    MiniMacSigner one(kKey, 32, 1);
    const Bytes payload{9, 8, 7};
    Bytes input{0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 9, 8, 7};
    const auto digest = hmac_sha256(kKey.bytes(), input);
    CHECK(one.sign(payload).tag == BitString::from_bytes(digest, 32));

    auto run = [&](std::uint8_t v, int pos) {
        MiniMacSigner s(kKey, 32, 4);
        Packet last;
        for (int i = 0; i < 10; ++i) last = s.sign(Bytes{static_cast<std::uint8_t>(i == pos ? v : i)});
        return last.tag;
    };
    for (int pos = 6; pos < 10; ++pos) CHECK(run(200, pos) != run(201, pos));
    CHECK(run(200, 5) == run(201, 5));
}

TEST_CASE("truncated tags are a prefix of the base MAC") {
    const MessageRecord rec{3, {1, 2, 3}};
    const auto pkt = truncated_sign(kKey, rec, 24);
    CHECK(pkt.tag == base_mac(kKey, rec).slice(0, 24));
    TruncatedSigner s(kKey, 24);
    s.sign({});
    s.sign({});
    s.sign({});
    CHECK(s.sign(rec.payload).tag == pkt.tag);
}

TEST_CASE("scheme configs") {
    CHECK(parse_scheme_kind("whips") == SchemeKind::Whips);
    CHECK(scheme_kind_name(SchemeKind::MiniMac) == "minimac");
    CHECK_THROWS_AS(parse_scheme_kind("nope"), ConfigError);
    CHECK(SchemeConfig::whips(10).window_n() == 13);
    CHECK(SchemeConfig::whips(10).max_delay() == 12);
    CHECK_THROWS_AS(SchemeConfig::cumac(10).validate(), ConfigError);
    CHECK_THROWS_AS(SchemeConfig::spmac(uniform_dependencies(MarkSet({0, 1, 4, 6}), 64), 128).validate(), ConfigError);
    const auto signer = make_signer(SchemeConfig::truncated(16), kKey);
    CHECK(signer->sign({}).tag.size() == 16);
}

TEST_CASE("wire format round trip and rejects") {
    Packet p{0x0102030405060708ULL, {0xaa, 0xbb}, BitString::from_binary("1011")};
    const auto wire = encode_packet(p);
    CHECK(hex_encode(wire) == "01020304050607080002aabbb0");
    CHECK(decode_packet(wire, 4) == p);

    auto bad = wire;
    bad.back() = 0xb1;
    CHECK_THROWS_AS(decode_packet(bad, 4), ProtocolError);
    CHECK_THROWS_AS(decode_packet(std::span(wire).first(wire.size() - 1), 4), ProtocolError);
    CHECK_THROWS_AS(decode_packet(wire, 12), ProtocolError);

    std::mt19937_64 gen(3);
    WhipsSigner w(kKey, 13);
    for (int i = 0; i < 50; ++i) {
        const auto pkt = w.sign(random_payload(gen));
        CHECK(decode_packet(encode_packet(pkt), 13) == pkt);
    }
}
