#pragma once

// Closed-form and exhaustive analytics: delay curves, worst-case resilience
// to dropped packets, memory footprints and selective-jamming success.

#include <cstdint>
#include <vector>

#include "promac/depsets.hpp"
#include "promac/layout.hpp"
#include "promac/schemes.hpp"

namespace promac {

/// entry[k] = accrued bits of a message after k further lossless packets,
/// capped at security_bits; k = 0 .. horizon.
std::vector<int> delay_curve(const DependencyLayout& layout, int horizon, int security_bits);

/// Index of the first entry reaching full security (max delay when lossless).
int full_security_delay(const DependencyLayout& layout, int security_bits);

struct Band {
    std::vector<int> lo;
    std::vector<int> hi;
};

/// Delay band over every profile build_profile can select from the pools:
/// lo[k] / hi[k] are the least and most bits any selection reaches after k
/// packets.
Band delay_band(int tag_bits, int security_bits, int g, int immediate_bits, int pool_size, int horizon);

enum class SearchMode { Auto, Exact, Greedy };

struct ResilienceQuery {
    DependencyLayout layout;
    int drops = 0;
    int security_bits = 128;
    /// Packets around the target where drops may be placed; 0 picks
    /// 2 * max_delay + 1. Smaller values than that are rejected.
    int horizon = 0;
    SearchMode mode = SearchMode::Auto;  ///< Auto: exact for drops <= 4
};

struct ResilienceResult {
    int security = 0;
    std::vector<int> dropped;  ///< positions relative to the target
    bool exact = false;
};

/// Least accrued security of a steady-state message after the given number
/// of adversarial drops. Greedy picks the drop that lowers the target most,
/// lowest position first on ties.
ResilienceResult worst_case_resilience(const ResilienceQuery& query);

struct MemoryRange {
    int min_bytes = 0;
    int max_bytes = 0;
};

struct PoolParams {
    int g = 1;
    int immediate_bits = 0;
    int pool_size = 64;
};

/// Per-stream sender state in bytes. Whips: n * 32; Mini-MAC: n * msg_len;
/// CuMAC: security_bits / 8; truncated: 0. SP-MAC keeps max_delay + 1
/// accumulators plus as many fill masks, reported over the best and worst
/// selection from the pools.
MemoryRange memory_model(SchemeKind scheme, int tag_bits, int security_bits, int msg_len,
                         const PoolParams& pool = {});

/// SP-MAC state for one concrete profile.
int spmac_memory(const BitDependencies& deps);

/// Probability that jamming every packet able to weaken a fixed target,
/// each attempt succeeding independently with probability q, leaves the
/// target with zero accrued bits.
///
/// Exact. Windows use the closed form; other layouts a dynamic program over
/// sets of invalidated tag components, which throws InfeasibleError past
/// `state_cap` distinct sets.
double jam_success_probability(const DependencyLayout& layout, double q, std::size_t state_cap = 1 << 20);

/// Same probability by summing over every drop pattern; for cross-checks
/// with at most 24 candidate positions.
double jam_success_enumerated(const DependencyLayout& layout, double q);

struct OperationCount {
    int base_calls = 0;    ///< keyed-hash invocations
    int hashed_bytes = 0;  ///< bytes fed to them
    int xor_words = 0;     ///< 64-bit XOR operations while signing
};

/// Work done by one sign call in steady state.
OperationCount operation_count(SchemeKind scheme, int tag_bits, int msg_len, int security_bits = 128,
                               int window = 0);

}  // namespace promac
