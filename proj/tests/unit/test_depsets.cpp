#include <doctest.h>

#include <map>
#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "promac/depsets.hpp"
#include "promac/errors.hpp"

using namespace promac;

TEST_CASE("g-Sidon predicate") {
    CHECK(is_g_sidon(MarkSet({0, 1, 4, 6}), 1));
    CHECK(is_g_sidon(MarkSet({0}), 1));
    CHECK_FALSE(is_g_sidon(MarkSet({0, 1, 2}), 1));
    CHECK(is_g_sidon(MarkSet({0, 1, 2}), 2));
    CHECK_FALSE(is_g_sidon(MarkSet({0, 1, 2, 3}), 2));
    const std::vector<int> unsorted{0, 3, 2};
    CHECK_THROWS_AS(is_g_sidon(unsorted, 1), ConfigError);
    CHECK_THROWS_AS(is_g_sidon(MarkSet({0, 1}), 0), ConfigError);
    CHECK_THROWS_AS(MarkSet({1, 2}), ConfigError);
    CHECK(max_difference_multiplicity(MarkSet({0, 1, 2, 3})) == 3);
}

TEST_CASE("shortest sets from search") {
    const auto four = search_shortest_sets(4, 1, 1, 64);
    REQUIRE(four.size() == 1);
    CHECK(four[0].length() == 6);
    CHECK(is_golomb(four[0]));
    CHECK(search_shortest_sets(2, 1, 1, 64)[0] == MarkSet({0, 1}));
    CHECK(search_shortest_sets(8, 1, 1, 40)[0].length() == 34);
    const auto sidon = search_shortest_sets(16, 4, 1, 64);
    CHECK(sidon[0].length() == 43);
    CHECK(is_g_sidon(sidon[0], 4));
    CHECK_THROWS_AS(search_shortest_sets(8, 1, 1, 33), InfeasibleError);
}

TEST_CASE("sets come in (length, lexicographic) order") {
    const auto sets = search_shortest_sets(5, 2, 30, 64);
    REQUIRE(sets.size() == 30);
    for (std::size_t i = 1; i < sets.size(); ++i) {
        const bool ordered = sets[i - 1].length() < sets[i].length() ||
                             (sets[i - 1].length() == sets[i].length() && sets[i - 1] < sets[i]);
        CHECK(ordered);
        CHECK(is_g_sidon(sets[i], 2));
    }
}

// Independent oracle: plain enumeration of subsets of {1..L-1} for small orders.
namespace {
int brute_minlen(int order, int g) {
    for (int len = order - 1;; ++len) {
        const int inner = order - 2;
        std::vector<int> pick(static_cast<std::size_t>(inner));
        std::function<bool(int, int)> rec = [&](int idx, int from) {
            if (idx == inner) {
                std::vector<int> marks{0};
                marks.insert(marks.end(), pick.begin(), pick.end());
                marks.push_back(len);
                return is_g_sidon(std::span<const int>(marks), g);
            }
            for (int v = from; v < len; ++v) {
                pick[static_cast<std::size_t>(idx)] = v;
                if (rec(idx + 1, v + 1)) return true;
            }
            return false;
        };
        if (rec(0, 1)) return len;
    }
}
}  // namespace

TEST_CASE("minimal lengths agree with brute force for small orders") {
    for (int g = 1; g <= 4; ++g) {
        for (int order = 2; order <= (g == 1 ? 8 : 9); ++order) {
            CAPTURE(g);
            CAPTURE(order);
            CHECK(shortest_length(order, g) == brute_minlen(order, g));
        }
    }
}

TEST_CASE("known optimal rulers") {
    const std::vector<int> lengths{0, 1, 3, 6, 11, 17, 25, 34, 44, 55, 72, 85, 106, 127, 151, 177};
    for (int order = 1; order <= kKnownRulerMaxOrder; ++order) {
        const auto& r = known_optimal_ruler(order);
        CHECK(r.length == lengths[static_cast<std::size_t>(order - 1)]);
        CHECK(r.set.order() == order);
        CHECK(r.set.length() == r.length);
        CHECK(is_golomb(r.set));
    }
    CHECK_THROWS_AS(known_optimal_ruler(17), ConfigError);
}

TEST_CASE("profile orders and composition") {
    CHECK(profile_orders(32, 128, 0) == std::vector<int>(32, 4));
    auto mixed = profile_orders(32, 128, 16);
    CHECK(std::count(mixed.begin(), mixed.begin() + 16, 1) == 16);
    CHECK(std::count(mixed.begin() + 16, mixed.end(), 7) == 16);
    const auto odd = profile_orders(10, 128, 0);
    CHECK(odd.front() == 13);
    CHECK(odd.back() == 12);
    CHECK(std::accumulate(odd.begin(), odd.end(), 0) == 128);
    CHECK_THROWS_AS(profile_orders(8, 128, 8), ConfigError);
}

TEST_CASE("build_profile samples distinct pool sets") {
    ProfileSeed seed{};
    seed[0] = 7;
    const auto p4 = build_profile(32, 128, 1, 0, 64, seed);
    CHECK(p4.bit_deps.size() == 32);
    std::set<MarkSet> distinct(p4.bit_deps.begin(), p4.bit_deps.end());
    CHECK(distinct.size() == 32);
    for (const auto& d : p4.bit_deps) {
        CHECK(d.order() == 4);
        CHECK(is_golomb(d));
    }
    CHECK_NOTHROW(validate_profile(p4));

    const auto p8 = build_profile(8, 128, 4, 0, 64, seed);
    for (const auto& d : p8.bit_deps) {
        CHECK(d.order() == 16);
        CHECK(is_g_sidon(d, 4));
    }

    const auto imm = build_profile(32, 128, 2, 16, 64, seed);
    for (int j = 0; j < 16; ++j) CHECK(imm.bit_deps[static_cast<std::size_t>(j)] == MarkSet({0}));
    for (int j = 16; j < 32; ++j) CHECK(imm.bit_deps[static_cast<std::size_t>(j)].order() == 7);

    CHECK(build_profile(32, 128, 1, 0, 64, seed) == p4);
    seed[0] = 8;
    CHECK_FALSE(build_profile(32, 128, 1, 0, 64, seed) == p4);
}

TEST_CASE("profile max delay") {
    CHECK(profile_max_delay(uniform_dependencies(MarkSet({0, 1, 4, 6}), 32)) == 6);
    CHECK(profile_max_delay(uniform_dependencies(MarkSet({0}), 32)) == 0);
    CHECK(profile_max_delay(uniform_dependencies(known_optimal_ruler(16).set, 8)) == 177);
    CHECK(profile_max_delay(uniform_dependencies(search_shortest_sets(16, 4, 1, 64)[0], 8)) == 43);
}

TEST_CASE("profile text round trip") {
    ProfileSeed seed{};
    seed[3] = 0xab;
    const auto p = build_profile(16, 128, 2, 0, 16, seed);
    const auto text = format_profile(p);
    CHECK(parse_profile(text) == p);
    CHECK(seed_from_hex(seed_to_hex(seed)) == seed);
    CHECK_THROWS_AS(parse_profile("tag_bits: 2\n"), ConfigError);
}

TEST_CASE("pools") {
    const auto& pool = dependency_pool(4, 1, 64);
    CHECK(pool.exhaustive);
    CHECK(pool.sets.size() == 64);
    CHECK(pool.sets.front().length() == 6);
}
