#pragma once

// Golomb rulers, g-Sidon sets and randomized per-bit dependency profiles.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace promac {

/// A sorted set of non-negative integer marks starting at 0.
///
/// Used both as a candidate Golomb ruler / g-Sidon set and as the
/// dependency offsets of a tag (bit): tag i depends on messages i - d.
class MarkSet {
public:
    MarkSet() : marks_{0} {}

    /// Throws ConfigError unless marks is non-empty, starts at 0 and is
    /// strictly increasing.
    explicit MarkSet(std::vector<int> marks);

    /// The sliding window {0, 1, ..., n-1}.
    static MarkSet window(int n);

    std::span<const int> marks() const noexcept { return marks_; }
    int order() const noexcept { return static_cast<int>(marks_.size()); }
    int length() const noexcept { return marks_.back(); }
    int operator[](std::size_t i) const noexcept { return marks_[i]; }
    auto begin() const noexcept { return marks_.begin(); }
    auto end() const noexcept { return marks_.end(); }
    bool contains(int mark) const noexcept;

    /// "0,1,4,6"
    std::string to_string() const;

    friend bool operator==(const MarkSet&, const MarkSet&) = default;
    friend auto operator<=>(const MarkSet&, const MarkSet&) = default;

private:
    std::vector<int> marks_;
};

/// True iff every positive difference occurs at most g times.
/// Throws ConfigError on unsorted, duplicate or negative marks, or g < 1.
bool is_g_sidon(std::span<const int> marks, int g);
inline bool is_g_sidon(const MarkSet& set, int g) { return is_g_sidon(set.marks(), g); }
inline bool is_golomb(const MarkSet& set) { return is_g_sidon(set, 1); }

/// Largest multiplicity of any positive pairwise difference (0 for order 1).
int max_difference_multiplicity(const MarkSet& set);

/// The `count` shortest g-Sidon sets of the given order with length at most
/// length_bound, ordered by (length, lexicographic). Exhaustive
/// branch-and-bound; deterministic.
///
/// node_budget caps the number of search nodes (0 = unlimited). Throws
/// InfeasibleError when fewer than `count` sets exist within the bound or
/// the budget runs out.
std::vector<MarkSet> search_shortest_sets(int order, int g, std::size_t count, int length_bound,
                                          std::uint64_t node_budget = 0);

/// Length of the shortest g-Sidon set of the given order. g = 1 answers from
/// the table of known optimal rulers for orders up to 16.
int shortest_length(int order, int g, int length_bound = 1 << 12, std::uint64_t node_budget = 0);

struct KnownRuler {
    int length;
    MarkSet set;
};

/// Published optimal Golomb rulers for orders 1..16. Throws ConfigError for
/// other orders.
const KnownRuler& known_optimal_ruler(int order);
inline constexpr int kKnownRulerMaxOrder = 16;

/// One dependency set per tag bit.
using BitDependencies = std::vector<MarkSet>;

using ProfileSeed = std::array<std::uint8_t, 16>;

/// Randomized per-bit dependency profile (R2-D2).
struct DependencyProfile {
    int tag_bits = 0;
    int security_bits = 0;
    int g = 1;
    int immediate_bits = 0;
    int pool_size = 0;
    ProfileSeed seed{};
    BitDependencies bit_deps;

    friend bool operator==(const DependencyProfile&, const DependencyProfile&) = default;
};

/// Per-bit orders for a profile: immediate bits get order 1, the remaining
/// bits share security_bits - immediate_bits, with the remainder going to
/// the lowest-numbered progressive bits. Throws ConfigError when infeasible.
std::vector<int> profile_orders(int tag_bits, int security_bits, int immediate_bits);

/// Build a profile by sampling, with a keyed PRF over `seed`, distinct sets
/// from the pool_size shortest g-Sidon sets of each required order. The
/// first immediate_bits positions are immediate ({0}).
DependencyProfile build_profile(int tag_bits, int security_bits, int g, int immediate_bits,
                                int pool_size, const ProfileSeed& seed);

/// Candidate sets for one order, shortest first.
struct DependencyPool {
    std::vector<MarkSet> sets;
    /// False when some lengths were only partially searched, so shorter
    /// sets than the ones listed may exist ("near-optimal pool").
    bool exhaustive = true;
};

/// Cached pool used by build_profile: the pool_size shortest sets of an
/// order, or a near-optimal pool when exhaustive search is too expensive.
const DependencyPool& dependency_pool(int order, int g, int pool_size);

/// Throws ConfigError naming the first broken invariant.
void validate_profile(const DependencyProfile& profile);

/// Number of subsequent packets after which a message reaches full security.
int profile_max_delay(const BitDependencies& deps);
inline int profile_max_delay(const DependencyProfile& p) { return profile_max_delay(p.bit_deps); }

/// Every tag bit uses the same set (deterministic Golomb / Sidon / window).
BitDependencies uniform_dependencies(const MarkSet& set, int tag_bits);

/// Text form: header lines "key: value" followed by "bit <j>: m0,m1,...".
std::string format_profile(const DependencyProfile& profile);
DependencyProfile parse_profile(std::string_view text);

ProfileSeed seed_from_hex(std::string_view hex);
std::string seed_to_hex(const ProfileSeed& seed);

namespace detail {
/// Every g-Sidon set of the order whose largest mark is exactly `length`, in
/// lexicographic order. `bitmask` selects the word-parallel search path.
std::vector<MarkSet> enumerate_exact_length(int order, int g, int length, bool bitmask);
}  // namespace detail

}  // namespace promac
