#include <doctest.h>

#include "promac/analysis.hpp"
#include "promac/errors.hpp"

using namespace promac;

namespace {

DependencyLayout golomb_layout(int order, int tag) {
    return DependencyLayout::from_bits(uniform_dependencies(known_optimal_ruler(order).set, tag));
}

ProfileSeed seed_of(int v) {
    ProfileSeed s{};
    s[0] = static_cast<std::uint8_t>(v);
    return s;
}

}  // namespace

TEST_CASE("delay curves") {
    const auto w = delay_curve(DependencyLayout::window(4, 32), 5, 128);
    CHECK(w == std::vector<int>{32, 64, 96, 128, 128, 128});
    CHECK(delay_curve(DependencyLayout::truncated(16), 3, 128) == std::vector<int>{16, 16, 16, 16});
    const auto g4 = delay_curve(golomb_layout(4, 32), 6, 128);
    CHECK(g4 == std::vector<int>{32, 64, 64, 64, 96, 96, 128});
    CHECK(full_security_delay(golomb_layout(16, 8), 128) == 177);
    const auto sidon = DependencyLayout::from_bits(uniform_dependencies(search_shortest_sets(16, 4, 1, 64)[0], 8));
    CHECK(full_security_delay(sidon, 128) == 43);
    CHECK(full_security_delay(DependencyLayout::window(13, 10), 128) == 12);
}

TEST_CASE("delay band brackets sampled profiles") {
    const auto band = delay_band(16, 128, 2, 0, 16, 40);
    for (int s = 0; s < 5; ++s) {
        const auto p = build_profile(16, 128, 2, 0, 16, seed_of(s));
        const auto curve = delay_curve(DependencyLayout::from_bits(p.bit_deps), 40, 128);
        for (std::size_t k = 0; k < curve.size(); ++k) {
            CHECK(band.lo[k] <= curve[k]);
            CHECK(curve[k] <= band.hi[k]);
        }
    }
    CHECK(band.hi.back() == 128);
}

TEST_CASE("worst-case resilience") {
    for (int tag : {8, 16, 32, 64}) {
        const auto w = DependencyLayout::window(128 / tag, tag);
        CHECK(worst_case_resilience({w, 1, 128}).security == tag);
        CHECK(worst_case_resilience({w, 2, 128}).security == 0);
    }
    const auto g4 = golomb_layout(4, 32);
    CHECK(worst_case_resilience({g4, 4, 128}).security == 0);
    CHECK(worst_case_resilience({g4, 3, 128}).security > 0);

    const auto p = build_profile(16, 128, 2, 0, 16, seed_of(1));
    const auto layout = DependencyLayout::from_bits(p.bit_deps);
    for (int k = 0; k <= 4; ++k) {
        const auto exact = worst_case_resilience({layout, k, 128, 0, SearchMode::Exact});
        const auto greedy = worst_case_resilience({layout, k, 128, 0, SearchMode::Greedy});
        CHECK(exact.exact);
        CHECK(exact.security >= std::max(0, 128 - 32 * k));
        CHECK(greedy.security >= exact.security);
        CoverMap map(layout);
        CHECK(map.security_after(exact.dropped) == exact.security);
    }
    CHECK_THROWS_AS(worst_case_resilience({g4, 2, 128, 5}), ConfigError);
}

TEST_CASE("cover map kill sets") {
    CoverMap map(golomb_layout(4, 1));
    CHECK(map.instance_count() == 4);
    for (int rel : map.killers()) CHECK(map.kills(rel).count() <= 1);
    CoverMap window(DependencyLayout::window(4, 32));
    CHECK(window.kills(-1).count() == 3);
    CHECK(window.kills(3).count() == 1);
}

TEST_CASE("memory model") {
    CHECK(memory_model(SchemeKind::Whips, 64, 128, 0).max_bytes == 64);
    CHECK(memory_model(SchemeKind::Whips, 10, 128, 0).max_bytes == 416);
    CHECK(memory_model(SchemeKind::MiniMac, 32, 128, 10).min_bytes == 40);
    CHECK(memory_model(SchemeKind::MiniMac, 32, 128, 50).max_bytes == 200);
    CHECK(memory_model(SchemeKind::CuMac, 32, 128, 0).max_bytes == 16);
    CHECK(memory_model(SchemeKind::Truncated, 32, 128, 0).max_bytes == 0);
    CHECK_THROWS_AS(memory_model(SchemeKind::CuMac, 10, 128, 0), ConfigError);
    const auto sp = memory_model(SchemeKind::SpMac, 32, 128, 0, {1, 0, 64});
    const auto& pool = dependency_pool(4, 1, 64);
    const BitDependencies shortest(pool.sets.begin(), pool.sets.begin() + 32);
    CHECK(sp.min_bytes == spmac_memory(shortest));
    CHECK(spmac_memory(uniform_dependencies(MarkSet({0, 1, 4, 6}), 32)) == 2 * 7 * 4);
    CHECK(sp.min_bytes <= sp.max_bytes);
}

TEST_CASE("jam success probability") {
    for (int n : {2, 4, 8}) {
        const auto w = DependencyLayout::window(n, 128 / n);
        CHECK(jam_success_probability(w, 0.0) == 0.0);
        CHECK(jam_success_probability(w, 1.0) == doctest::Approx(1.0));
        for (double q : {0.3, 0.5, 0.9}) {
            CHECK(jam_success_probability(w, q) == doctest::Approx(jam_success_enumerated(w, q)).epsilon(1e-12));
        }
    }
    const auto g4 = golomb_layout(4, 32);
    for (double q : {0.2, 0.7, 0.95}) {
        CHECK(jam_success_probability(g4, q) == doctest::Approx(jam_success_enumerated(g4, q)).epsilon(1e-12));
    }
    CHECK(jam_success_probability(DependencyLayout::window(16, 8), 0.976) > 0.999);
    CHECK(jam_success_probability(DependencyLayout::window(4, 32), 0.99) > 0.999);
    const auto imm = DependencyLayout::from_bits(build_profile(32, 128, 2, 16, 32, seed_of(2)).bit_deps);
    CHECK(jam_success_probability(imm, 0.9) == 0.0);
    CHECK_THROWS_AS(jam_success_probability(golomb_layout(16, 8), 0.5, 16), InfeasibleError);
}

TEST_CASE("operation counts") {
    CHECK(operation_count(SchemeKind::Whips, 16, 10).base_calls == 2);
    CHECK(operation_count(SchemeKind::Truncated, 16, 10).base_calls == 1);
    CHECK(operation_count(SchemeKind::SpMac, 16, 10).base_calls == 1);
    CHECK(operation_count(SchemeKind::MiniMac, 8, 50, 128, 16).hashed_bytes == 8 + 16 * 52);
    CHECK(operation_count(SchemeKind::Whips, 16, 10).hashed_bytes == 11 + 9 + 32 * 8);
}
