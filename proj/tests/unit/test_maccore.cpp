#include <doctest.h>

#include <fstream>
#include <sstream>

#include "promac/bits.hpp"
#include "promac/errors.hpp"
#include "promac/maccore.hpp"

using namespace promac;

namespace {

struct Vector {
    std::string name;
    Bytes key;
    Bytes message;
    std::string expected;
};

std::vector<Vector> load_vectors() {
    std::ifstream in(std::string(PROMAC_FIXTURES) + "/hmac_vectors.txt");
    REQUIRE(in.good());
    std::vector<Vector> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string name, key, msg, mac;
        row >> name >> key >> msg >> mac;
        out.push_back({name, hex_decode(key), msg == "-" ? Bytes{} : hex_decode(msg), mac});
    }
    return out;
}

const Key kKey = Key::from_hex("000102030405060708090a0b0c0d0e0f101112131415161718191a1b1c1d1e1f");

}  // namespace

TEST_CASE("hmac-sha256 matches reference vectors") {
    const auto vectors = load_vectors();
    REQUIRE(vectors.size() >= 5);
    for (const auto& v : vectors) {
        CAPTURE(v.name);
        const auto mac = hmac_sha256(v.key, v.message);
        CHECK(hex_encode(mac) == v.expected);
    }
}

TEST_CASE("base_mac is the truncated HMAC over seq and payload") {
    for (const auto& v : load_vectors()) {
        if (v.name.rfind("base-", 0) != 0) continue;
        CAPTURE(v.name);
        std::uint64_t seq = 0;
        for (int i = 0; i < 8; ++i) seq = seq << 8 | v.message[static_cast<std::size_t>(i)];
        const MessageRecord rec{seq, Bytes(v.message.begin() + 8, v.message.end())};
        CHECK(base_mac(kKey, rec, 256).to_hex() == v.expected);
        CHECK(base_mac(kKey, rec, 128).to_hex() == v.expected.substr(0, 32));
    }
}

TEST_CASE("base_mac determinism and sequence binding") {
    const MessageRecord a{0, {}};
    const MessageRecord b{1, {}};
    CHECK(base_mac(kKey, a) == base_mac(kKey, a));
    CHECK(base_mac(kKey, a) != base_mac(kKey, b));
    CHECK(base_mac(kKey, a).size() == 128);
    CHECK_THROWS_AS(base_mac(kKey, a, 0), ConfigError);
    CHECK_THROWS_AS(base_mac(kKey, a, 257), ConfigError);
}

TEST_CASE("fragment_bit addresses part * tag_bits + bit") {
    const auto zeros = BitString::from_binary("000000");
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 2; ++b) CHECK_FALSE(fragment_bit(zeros, a, b, 2));
    }
    const auto sigma = BitString::from_binary("101101");
    CHECK(fragment_bit(sigma, 1, 0, 2));
    CHECK(fragment_bit(sigma, 2, 1, 2));
    CHECK_FALSE(fragment_bit(sigma, 0, 1, 2));
    CHECK_THROWS_AS(fragment_bit(sigma, 3, 0, 2), ConfigError);
}

TEST_CASE("key length limits") {
    CHECK_THROWS_AS(Key(Bytes(15, 1)), ConfigError);
    CHECK_NOTHROW(Key(Bytes(16, 1)));
    CHECK_NOTHROW(Key(Bytes(64, 1)));
    CHECK_THROWS_AS(Key(Bytes(65, 1)), ConfigError);
    CHECK_THROWS_AS(Key::from_hex("abc"), ConfigError);
}

TEST_CASE("bit strings") {
    auto s = BitString::from_binary("1011001");
    CHECK(s.size() == 7);
    CHECK(s.to_binary() == "1011001");
    CHECK(s.bytes()[0] == 0xB2);
    CHECK(s.slice(2, 3).to_binary() == "110");
    s ^= BitString::ones(7);
    CHECK(s.to_binary() == "0100110");
    CHECK(hex_encode(hex_decode("00ff10")) == "00ff10");
}

TEST_CASE("counting suite records calls") {
    MacCounters counters;
    auto suite = MacSuite::standard();
    suite.counters = &counters;
    const Bytes payload{1, 2, 3};
    suite.sigma(kKey, 4, payload, 128);
    CHECK(counters.base_calls == 1);
    CHECK(counters.hash_calls == 1);
    CHECK(counters.hashed_bytes == 11);
}
