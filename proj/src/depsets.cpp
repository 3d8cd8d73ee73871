#include "promac/depsets.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

#include "promac/errors.hpp"
#include "promac/maccore.hpp"

namespace promac {

// ---------------------------------------------------------------------------
// MarkSet

MarkSet::MarkSet(std::vector<int> marks) : marks_(std::move(marks)) {
    if (marks_.empty()) {
        throw ConfigError("mark set must not be empty");
    }
    if (marks_.front() != 0) {
        throw ConfigError("mark set must start at 0");
    }
    for (std::size_t i = 1; i < marks_.size(); ++i) {
        if (marks_[i] <= marks_[i - 1]) {
            throw ConfigError("marks must be strictly increasing");
        }
    }
}

MarkSet MarkSet::window(int n) {
    if (n < 1) {
        throw ConfigError("window size must be positive");
    }
    std::vector<int> marks(static_cast<std::size_t>(n));
    std::iota(marks.begin(), marks.end(), 0);
    return MarkSet(std::move(marks));
}

bool MarkSet::contains(int mark) const noexcept {
    return std::binary_search(marks_.begin(), marks_.end(), mark);
}

std::string MarkSet::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < marks_.size(); ++i) {
        if (i != 0) s.push_back(',');
        s += std::to_string(marks_[i]);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

std::vector<int> difference_counts(std::span<const int> marks) {
    std::vector<int> counts(static_cast<std::size_t>(marks.back()) + 1, 0);
    for (std::size_t i = 0; i < marks.size(); ++i) {
        for (std::size_t j = i + 1; j < marks.size(); ++j) {
            ++counts[static_cast<std::size_t>(marks[j] - marks[i])];
        }
    }
    return counts;
}

}  // namespace

bool is_g_sidon(std::span<const int> marks, int g) {
    if (g < 1) {
        throw ConfigError("g must be positive");
    }
    if (marks.empty()) {
        throw ConfigError("mark set must not be empty");
    }
    for (std::size_t i = 0; i < marks.size(); ++i) {
        if (marks[i] < 0) {
            throw ConfigError("marks must be non-negative");
        }
        if (i > 0 && marks[i] <= marks[i - 1]) {
            throw ConfigError("marks must be strictly increasing");
        }
    }
    const auto counts = difference_counts(marks);
    return std::all_of(counts.begin(), counts.end(), [g](int c) { return c <= g; });
}

int max_difference_multiplicity(const MarkSet& set) {
    const auto counts = difference_counts(set.marks());
    return *std::max_element(counts.begin(), counts.end());
}

// ---------------------------------------------------------------------------
// Known optimal rulers

const KnownRuler& known_optimal_ruler(int order) {
    static const std::vector<KnownRuler> table = [] {
        const std::vector<std::vector<int>> rulers = {
            {0},
            {0, 1},
            {0, 1, 3},
            {0, 1, 4, 6},
            {0, 1, 4, 9, 11},
            {0, 1, 4, 10, 12, 17},
            {0, 1, 4, 10, 18, 23, 25},
            {0, 1, 4, 9, 15, 22, 32, 34},
            {0, 1, 5, 12, 25, 27, 35, 41, 44},
            {0, 1, 6, 10, 23, 26, 34, 41, 53, 55},
            {0, 1, 4, 13, 28, 33, 47, 54, 64, 70, 72},
            {0, 2, 6, 24, 29, 40, 43, 55, 68, 75, 76, 85},
            {0, 2, 5, 25, 37, 43, 59, 70, 85, 89, 98, 99, 106},
            {0, 4, 6, 20, 35, 52, 59, 77, 78, 86, 89, 99, 122, 127},
            {0, 4, 20, 30, 57, 59, 62, 76, 100, 111, 123, 136, 144, 145, 151},
            {0, 1, 4, 11, 26, 32, 56, 68, 76, 115, 117, 134, 150, 163, 168, 177},
        };
        std::vector<KnownRuler> out;
        for (const auto& r : rulers) {
            MarkSet set(r);
            out.push_back({set.length(), std::move(set)});
        }
        return out;
    }();
    if (order < 1 || order > kKnownRulerMaxOrder) {
        throw ConfigError("no known optimal ruler of order " + std::to_string(order));
    }
    return table[static_cast<std::size_t>(order - 1)];
}

// ---------------------------------------------------------------------------
// Branch-and-bound search

namespace {

std::recursive_mutex& cache_mutex() {
    static std::recursive_mutex m;
    return m;
}

// Per (order, g): a proven lower bound on the length, exact when `exact`.
struct LengthBound {
    int value = 0;
    bool exact = false;
};

std::map<std::pair<int, int>, LengthBound>& minlen_cache() {
    static std::map<std::pair<int, int>, LengthBound> cache;
    return cache;
}

// Nodes spent proving a single minimal length before settling for a weaker
// (still valid) lower bound.
constexpr std::uint64_t kMinlenBudget = 6'000'000'000ULL;

using Mask128 = unsigned __int128;
constexpr int kMaxMaskG = 8;

// Enumerates all g-Sidon sets of a fixed order whose largest mark is exactly
// `length`, in lexicographic order, until the visitor returns false.
//
// minlen[k] must be a lower bound on the length of any g-Sidon set of order k
// (k < order); it bounds both the prefix {0..m} and the suffix {m..length}.
class FixedLengthSearch {
public:
    struct Options {
        bool mirror_break = false;  // existence checks only
        bool bitmask = true;
        std::uint64_t budget = 0;   // 0 = unlimited
    };

    FixedLengthSearch(int order, int g, int length, std::span<const int> minlen,
                      std::uint64_t& nodes, Options options)
        : opt_(options),
          order_(order),
          g_(g),
          length_(length),
          minlen_(minlen),
          marks_(static_cast<std::size_t>(order)),
          nodes_(nodes) {}

    template <typename Visitor>
    void run(Visitor&& visit) {
        if (order_ == 1) {
            if (length_ == 0) visit(MarkSet({0}));
            return;
        }
        if (length_ < order_ - 1) return;
        marks_.front() = 0;
        marks_.back() = length_;
        if (order_ == 2) {
            visit(MarkSet(marks_));
            return;
        }
        if (opt_.bitmask && g_ <= kMaxMaskG && length_ <= 63) {
            start_mask<std::uint64_t>(visit);
        } else if (opt_.bitmask && g_ <= kMaxMaskG && length_ <= 127) {
            start_mask<Mask128>(visit);
        } else {
            counts_.assign(static_cast<std::size_t>(length_) + 1, 0);
            counts_[static_cast<std::size_t>(length_)] = 1;
            place_counts(1, 1, visit);
        }
    }

    bool exhausted_budget() const noexcept { return out_of_budget_; }

private:
    std::pair<int, int> range(int idx, int lo) const {
        // Prefix {0..m} holds idx+1 marks; suffix {m..length} holds order-idx.
        const int first = std::max(lo, minlen_[static_cast<std::size_t>(idx + 1)]);
        int last = length_ - minlen_[static_cast<std::size_t>(order_ - idx)];
        // Keep the member of each mirror pair whose first gap is not larger
        // than its last gap.
        if (opt_.mirror_break && idx >= 2) last = std::min(last, length_ - marks_[1]);
        return {first, last};
    }

    bool tick() {
        if (opt_.budget != 0 && ++nodes_ > opt_.budget) {
            out_of_budget_ = true;
            return false;
        }
        return true;
    }

    template <typename Mask>
    using Layers = std::array<Mask, kMaxMaskG>;

    // layers[k] has bit d set iff difference d already occurs more than k times.
    template <typename Mask>
    static void bump(Layers<Mask>& layers, int g, Mask bits) noexcept {
        for (int k = g - 1; k >= 1; --k) {
            layers[static_cast<std::size_t>(k)] |= layers[static_cast<std::size_t>(k - 1)] & bits;
        }
        layers[0] |= bits;
    }

    template <typename Mask, typename Visitor>
    void start_mask(Visitor& visit) {
        Layers<Mask> layers{};
        layers[0] = Mask{1} << length_;
        place_mask<Mask>(1, 1, Mask{1}, layers, visit);
    }

    // `dist` has bit k set iff a placed mark sits k below marks_[idx-1].
    template <typename Mask, typename Visitor>
    bool place_mask(int idx, int lo, Mask dist, const Layers<Mask>& layers, Visitor& visit) {
        if (idx == order_ - 1) {
            return visit(MarkSet(marks_));
        }
        const int prev = marks_[static_cast<std::size_t>(idx - 1)];
        const auto [first, last] = range(idx, lo);
        const Mask full = layers[static_cast<std::size_t>(g_ - 1)];
        for (int m = first; m <= last; ++m) {
            if (!tick()) return false;
            const Mask diffs = dist << (m - prev);
            if ((diffs & full) != 0) continue;
            const Mask tail = Mask{1} << (length_ - m);
            if ((diffs & tail) != 0) {
                // length - m equals some m - x: that difference gains two.
                if (g_ < 2 || (layers[static_cast<std::size_t>(g_ - 2)] & tail) != 0) continue;
            } else if ((tail & full) != 0) {
                continue;
            }
            Layers<Mask> next = layers;
            bump(next, g_, diffs);
            bump(next, g_, tail);
            marks_[static_cast<std::size_t>(idx)] = m;
            if (!place_mask<Mask>(idx + 1, m + 1, diffs | Mask{1}, next, visit)) return false;
        }
        return true;
    }

    template <typename Visitor>
    bool place_counts(int idx, int lo, Visitor& visit) {
        if (idx == order_ - 1) {
            return visit(MarkSet(marks_));
        }
        const auto [first, last] = range(idx, lo);
        for (int m = first; m <= last; ++m) {
            if (!tick()) return false;
            if (!add(idx, m)) continue;
            marks_[static_cast<std::size_t>(idx)] = m;
            const bool keep_going = place_counts(idx + 1, m + 1, visit);
            remove(idx, m);
            if (!keep_going) return false;
        }
        return true;
    }

    bool add(int idx, int m) {
        for (int i = 0; i < idx; ++i) {
            if (++count(m - marks_[static_cast<std::size_t>(i)]) > g_) {
                for (int j = 0; j <= i; ++j) --count(m - marks_[static_cast<std::size_t>(j)]);
                return false;
            }
        }
        if (++count(length_ - m) > g_) {
            --count(length_ - m);
            for (int j = 0; j < idx; ++j) --count(m - marks_[static_cast<std::size_t>(j)]);
            return false;
        }
        return true;
    }

    void remove(int idx, int m) {
        for (int i = 0; i < idx; ++i) --count(m - marks_[static_cast<std::size_t>(i)]);
        --count(length_ - m);
    }

    std::uint8_t& count(int d) { return counts_[static_cast<std::size_t>(d)]; }

    Options opt_;
    int order_;
    int g_;
    int length_;
    std::span<const int> minlen_;
    std::vector<int> marks_;
    std::vector<std::uint8_t> counts_;
    std::uint64_t& nodes_;
    bool out_of_budget_ = false;
};

LengthBound length_bound_for(int order, int g);

// bounds[k] for k in 0..order; bounds[order] is the bound for `order` itself
// only when include_self.
std::vector<int> bound_table(int order, int g, bool include_self) {
    std::vector<int> minlen(static_cast<std::size_t>(order) + 1, 0);
    const int top = include_self ? order : order - 1;
    for (int k = 1; k <= top; ++k) {
        minlen[static_cast<std::size_t>(k)] = length_bound_for(k, g).value;
    }
    if (!include_self) {
        minlen[static_cast<std::size_t>(order)] = order > 1 ? minlen[static_cast<std::size_t>(order - 1)] + 1 : 0;
    }
    return minlen;
}

// Exact minimal length via mirror-broken existence checks; throws
// InfeasibleError on bound or budget exhaustion.
int search_minlen(int order, int g, int length_bound, std::uint64_t budget) {
    if (order == 1) return 0;
    const auto minlen = bound_table(order, g, false);
    std::uint64_t nodes = 0;
    for (int length = minlen[static_cast<std::size_t>(order)]; length <= length_bound; ++length) {
        FixedLengthSearch search(order, g, length, minlen, nodes, {.mirror_break = true, .budget = budget});
        bool found = false;
        search.run([&](const MarkSet&) {
            found = true;
            return false;
        });
        if (search.exhausted_budget()) {
            throw InfeasibleError("search node budget exhausted for order " + std::to_string(order));
        }
        if (found) return length;
    }
    throw InfeasibleError("no " + std::to_string(g) + "-Sidon set of order " +
                          std::to_string(order) + " within length " +
                          std::to_string(length_bound));
}

// Minimal lengths of g-Sidon sets found by this search (orders 2, 3, ...).
// Proving the larger entries takes minutes, so they seed the bounds.
std::optional<int> tabulated_minlen(int order, int g) {
    static const std::map<int, std::vector<int>> table = {
        {2, {1, 2, 4, 6, 9, 13, 18, 23, 29, 36, 44, 53, 63, 74}},
        {3, {1, 2, 3, 5, 7, 10, 13, 16, 20, 25, 30, 35, 42, 49}},
        {4, {1, 2, 3, 4, 6, 8, 10, 13, 16, 20, 23, 28, 32, 37, 43}},
    };
    const auto it = table.find(g);
    if (it == table.end() || order < 2) return std::nullopt;
    const auto idx = static_cast<std::size_t>(order - 2);
    if (idx >= it->second.size()) return std::nullopt;
    return it->second[idx];
}

LengthBound length_bound_for(int order, int g) {
    if (order <= 1) return {0, true};
    if (g == 1 && order <= kKnownRulerMaxOrder) {
        return {known_optimal_ruler(order).length, true};
    }
    if (auto known = tabulated_minlen(order, g)) return {*known, true};
    std::lock_guard lock(cache_mutex());
    if (auto it = minlen_cache().find({order, g}); it != minlen_cache().end()) {
        return it->second;
    }
    LengthBound bound;
    try {
        bound = {search_minlen(order, g, 1 << 12, kMinlenBudget), true};
    } catch (const InfeasibleError&) {
        // Removing the last mark of a set leaves a shorter set of order-1.
        bound = {length_bound_for(order - 1, g).value + 1, false};
    }
    minlen_cache()[{order, g}] = bound;
    return bound;
}

struct Collected {
    std::vector<MarkSet> sets;
    bool exhaustive = true;
};

// Walk lengths upward from `start`, collecting sets in (length, lex) order.
// With per_length budgets a capped length is skipped (the result is then
// no longer guaranteed to be the shortest); otherwise the budget is global
// and exhaustion throws.
Collected collect_sets(int order, int g, std::size_t count, int start, int length_bound,
                       std::span<const int> minlen, std::uint64_t budget, bool per_length) {
    Collected out;
    std::uint64_t nodes = 0;
    for (int length = start; length <= length_bound && out.sets.size() < count; ++length) {
        if (per_length) nodes = 0;
        FixedLengthSearch search(order, g, length, minlen, nodes, {.budget = budget});
        search.run([&](const MarkSet& set) {
            out.sets.push_back(set);
            return out.sets.size() < count;
        });
        if (search.exhausted_budget()) {
            if (!per_length) {
                throw InfeasibleError("search node budget exhausted for order " +
                                      std::to_string(order) + " after " +
                                      std::to_string(out.sets.size()) + " sets");
            }
            out.exhaustive = false;
        }
    }
    return out;
}

}  // namespace

namespace detail {

std::vector<MarkSet> enumerate_exact_length(int order, int g, int length, bool bitmask) {
    if (order < 1 || g < 1) throw ConfigError("order and g must be positive");
    const auto minlen = bound_table(order, g, false);
    std::vector<MarkSet> out;
    std::uint64_t nodes = 0;
    FixedLengthSearch search(order, g, length, minlen, nodes, {.bitmask = bitmask});
    search.run([&](const MarkSet& set) {
        out.push_back(set);
        return true;
    });
    return out;
}

}  // namespace detail

std::vector<MarkSet> search_shortest_sets(int order, int g, std::size_t count, int length_bound,
                                          std::uint64_t node_budget) {
    if (order < 1 || g < 1 || count < 1 || length_bound < 0) {
        throw ConfigError("search needs order >= 1, g >= 1, count >= 1");
    }
    if (order == 1) {
        if (count > 1) throw InfeasibleError("bound exhausted: only one set of order 1 exists");
        return {MarkSet({0})};
    }
    // Large optimal rulers cannot be re-proven at desk scale; the published
    // optimum stands in.
    if (g == 1 && order > 10 && count == 1) {
        const auto& known = known_optimal_ruler(order);
        if (known.length > length_bound) {
            throw InfeasibleError("bound exhausted: known optimal ruler exceeds the length bound");
        }
        return {known.set};
    }
    const auto minlen = bound_table(order, g, false);
    const int start = shortest_length(order, g, length_bound, node_budget);
    auto found = collect_sets(order, g, count, start, length_bound, minlen, node_budget, false);
    if (found.sets.size() < count) {
        throw InfeasibleError("bound exhausted: only " + std::to_string(found.sets.size()) + " of " +
                              std::to_string(count) + " sets within length " +
                              std::to_string(length_bound));
    }
    return std::move(found.sets);
}

int shortest_length(int order, int g, int length_bound, std::uint64_t node_budget) {
    if (order < 1 || g < 1) {
        throw ConfigError("order and g must be positive");
    }
    if (order == 1) return 0;
    if (g == 1 && order <= kKnownRulerMaxOrder) {
        return known_optimal_ruler(order).length;
    }
    if (auto known = tabulated_minlen(order, g)) {
        if (*known > length_bound) {
            throw InfeasibleError("bound exhausted: shortest set exceeds the length bound");
        }
        return *known;
    }
    std::lock_guard lock(cache_mutex());
    if (auto it = minlen_cache().find({order, g}); it != minlen_cache().end() && it->second.exact) {
        return it->second.value;
    }
    const int value = search_minlen(order, g, length_bound, node_budget);
    minlen_cache()[{order, g}] = {value, true};
    return value;
}

// ---------------------------------------------------------------------------
// Profiles

std::vector<int> profile_orders(int tag_bits, int security_bits, int immediate_bits) {
    if (tag_bits < 1 || security_bits < 1) {
        throw ConfigError("tag_bits and security_bits must be positive");
    }
    if (immediate_bits < 0 || immediate_bits > tag_bits) {
        throw ConfigError("immediate_bits must be in 0..tag_bits");
    }
    if (security_bits < tag_bits) {
        throw ConfigError("security_bits must be at least tag_bits");
    }
    const int progressive = tag_bits - immediate_bits;
    const int remaining = security_bits - immediate_bits;
    if (progressive == 0) {
        if (remaining != 0) {
            throw ConfigError("all-immediate profile must have security_bits == tag_bits");
        }
        return std::vector<int>(static_cast<std::size_t>(tag_bits), 1);
    }
    std::vector<int> orders(static_cast<std::size_t>(tag_bits), 1);
    const int base = remaining / progressive;
    const int extra = remaining % progressive;
    for (int j = 0; j < progressive; ++j) {
        orders[static_cast<std::size_t>(immediate_bits + j)] = base + (j < extra ? 1 : 0);
    }
    return orders;
}

namespace {

// Keyed pseudorandom integer stream: HMAC-SHA-256(seed, label || counter).
class PrfStream {
public:
    PrfStream(const ProfileSeed& seed, int order) : seed_(seed), order_(order) {}

    std::uint64_t next_u64() {
        if (pos_ + 8 > block_.size()) refill();
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) {
            v = v << 8 | block_[pos_++];
        }
        return v;
    }

    // Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        for (;;) {
            const auto v = next_u64();
            if (v < limit) return v % bound;
        }
    }

private:
    void refill() {
        static constexpr std::string_view kLabel = "promac-r2d2-select";
        Bytes msg(kLabel.begin(), kLabel.end());
        for (int shift = 24; shift >= 0; shift -= 8) {
            msg.push_back(static_cast<std::uint8_t>(static_cast<std::uint32_t>(order_) >> shift));
        }
        for (int shift = 56; shift >= 0; shift -= 8) {
            msg.push_back(static_cast<std::uint8_t>(counter_ >> shift));
        }
        ++counter_;
        block_ = hmac_sha256(seed_, msg);
        pos_ = 0;
    }

    ProfileSeed seed_;
    int order_;
    std::uint64_t counter_ = 0;
    Digest block_{};
    std::size_t pos_ = 32;
};

std::map<std::tuple<int, int, int>, DependencyPool>& pool_cache() {
    static std::map<std::tuple<int, int, int>, DependencyPool> cache;
    return cache;
}

// Nodes spent per candidate length while filling a pool; lengths that blow
// the budget contribute only the sets found so far.
constexpr std::uint64_t kPoolLengthBudget = 2'000'000'000ULL;

}  // namespace

const DependencyPool& dependency_pool(int order, int g, int pool_size) {
    if (order < 1 || g < 1 || pool_size < 1) {
        throw ConfigError("pool needs positive order, g and pool_size");
    }
    const auto key = std::make_tuple(order, g, pool_size);
    std::lock_guard lock(cache_mutex());
    if (auto it = pool_cache().find(key); it != pool_cache().end()) return it->second;

    DependencyPool pool;
    if (order == 1) {
        pool.sets = {MarkSet({0})};
    } else {
        const auto minlen = bound_table(order, g, true);
        const int start = minlen[static_cast<std::size_t>(order)];
        pool.exhaustive = g == 1 ? order <= kKnownRulerMaxOrder : length_bound_for(order, g).exact;
        auto found = collect_sets(order, g, static_cast<std::size_t>(pool_size), start,
                                  4 * start + 64, minlen, kPoolLengthBudget, true);
        pool.exhaustive = pool.exhaustive && found.exhaustive;
        pool.sets = std::move(found.sets);
    }
    return pool_cache().try_emplace(key, std::move(pool)).first->second;
}

DependencyProfile build_profile(int tag_bits, int security_bits, int g, int immediate_bits,
                                int pool_size, const ProfileSeed& seed) {
    if (g < 1) throw ConfigError("g must be positive");
    if (pool_size < tag_bits) {
        throw ConfigError("pool_size must be at least tag_bits");
    }
    const auto orders = profile_orders(tag_bits, security_bits, immediate_bits);

    DependencyProfile profile;
    profile.tag_bits = tag_bits;
    profile.security_bits = security_bits;
    profile.g = g;
    profile.immediate_bits = immediate_bits;
    profile.pool_size = pool_size;
    profile.seed = seed;
    profile.bit_deps.assign(static_cast<std::size_t>(tag_bits), MarkSet({0}));

    // Group progressive bits by order; each group samples without replacement.
    std::map<int, std::vector<int>> bits_by_order;
    for (int j = immediate_bits; j < tag_bits; ++j) {
        bits_by_order[orders[static_cast<std::size_t>(j)]].push_back(j);
    }
    for (const auto& [order, bits] : bits_by_order) {
        if (order == 1) {
            throw ConfigError("progressive bits of order 1 would duplicate immediate bits");
        }
        const auto& pool = dependency_pool(order, g, pool_size).sets;
        if (pool.size() < bits.size()) {
            throw ConfigError("pool too small for distinct sampling");
        }
        std::vector<std::size_t> index(pool.size());
        std::iota(index.begin(), index.end(), std::size_t{0});
        PrfStream prf(seed, order);
        for (std::size_t i = 0; i < bits.size(); ++i) {
            const auto pick = i + prf.below(index.size() - i);
            std::swap(index[i], index[pick]);
            profile.bit_deps[static_cast<std::size_t>(bits[i])] = pool[index[i]];
        }
    }
    validate_profile(profile);
    return profile;
}

void validate_profile(const DependencyProfile& p) {
    if (p.tag_bits < 1 || static_cast<int>(p.bit_deps.size()) != p.tag_bits) {
        throw ConfigError("profile must hold exactly tag_bits dependency sets");
    }
    if (p.immediate_bits < 0 || p.immediate_bits > p.tag_bits) {
        throw ConfigError("immediate_bits must be in 0..tag_bits");
    }
    int total = 0;
    int immediate = 0;
    for (const auto& set : p.bit_deps) {
        total += set.order();
        if (set.order() == 1) ++immediate;
        if (!is_g_sidon(set, p.g)) {
            throw ConfigError("dependency set " + set.to_string() + " is not " +
                              std::to_string(p.g) + "-Sidon");
        }
    }
    if (total != p.security_bits) {
        throw ConfigError("dependency orders sum to " + std::to_string(total) +
                          ", expected security_bits " + std::to_string(p.security_bits));
    }
    if (immediate != p.immediate_bits) {
        throw ConfigError("profile has " + std::to_string(immediate) +
                          " immediate bits, expected " + std::to_string(p.immediate_bits));
    }
    std::vector<MarkSet> progressive;
    for (const auto& set : p.bit_deps) {
        if (set.order() > 1) progressive.push_back(set);
    }
    std::sort(progressive.begin(), progressive.end());
    if (std::adjacent_find(progressive.begin(), progressive.end()) != progressive.end()) {
        throw ConfigError("progressive dependency sets must be pairwise distinct");
    }
}

int profile_max_delay(const BitDependencies& deps) {
    int delay = 0;
    for (const auto& set : deps) delay = std::max(delay, set.length());
    return delay;
}

BitDependencies uniform_dependencies(const MarkSet& set, int tag_bits) {
    if (tag_bits < 1) throw ConfigError("tag_bits must be positive");
    return BitDependencies(static_cast<std::size_t>(tag_bits), set);
}

// ---------------------------------------------------------------------------
// Text format

ProfileSeed seed_from_hex(std::string_view hex) {
    const auto bytes = hex_decode(hex);
    if (bytes.size() != 16) {
        throw ConfigError("profile seed must be 16 bytes (32 hex digits)");
    }
    ProfileSeed seed{};
    std::copy(bytes.begin(), bytes.end(), seed.begin());
    return seed;
}

std::string seed_to_hex(const ProfileSeed& seed) { return hex_encode(seed); }

std::string format_profile(const DependencyProfile& p) {
    std::ostringstream out;
    out << "tag_bits: " << p.tag_bits << '\n'
        << "security_bits: " << p.security_bits << '\n'
        << "g: " << p.g << '\n'
        << "immediate_bits: " << p.immediate_bits << '\n'
        << "pool_size: " << p.pool_size << '\n'
        << "seed: " << seed_to_hex(p.seed) << '\n';
    for (std::size_t j = 0; j < p.bit_deps.size(); ++j) {
        out << "bit " << j << ": " << p.bit_deps[j].to_string() << '\n';
    }
    return out.str();
}

namespace {

int parse_int(std::string_view s, std::string_view what) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ConfigError("profile: malformed " + std::string(what) + " '" + std::string(s) + "'");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

DependencyProfile parse_profile(std::string_view text) {
    DependencyProfile p;
    bool have_seed = false;
    std::map<int, MarkSet> bits;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const auto line = trim(text.substr(pos, eol - pos));
        pos = eol + 1;
        if (line.empty() || line.front() == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw ConfigError("profile: missing ':' in line '" + std::string(line) + "'");
        }
        const auto key = trim(line.substr(0, colon));
        const auto value = trim(line.substr(colon + 1));
        if (key.starts_with("bit ")) {
            const int j = parse_int(key.substr(4), "bit index");
            std::vector<int> marks;
            std::size_t start = 0;
            while (start <= value.size()) {
                auto comma = value.find(',', start);
                if (comma == std::string_view::npos) comma = value.size();
                marks.push_back(parse_int(value.substr(start, comma - start), "mark"));
                start = comma + 1;
            }
            if (!bits.emplace(j, MarkSet(std::move(marks))).second) {
                throw ConfigError("profile: duplicate bit " + std::to_string(j));
            }
        } else if (key == "tag_bits") {
            p.tag_bits = parse_int(value, key);
        } else if (key == "security_bits") {
            p.security_bits = parse_int(value, key);
        } else if (key == "g") {
            p.g = parse_int(value, key);
        } else if (key == "immediate_bits") {
            p.immediate_bits = parse_int(value, key);
        } else if (key == "pool_size") {
            p.pool_size = parse_int(value, key);
        } else if (key == "seed") {
            p.seed = seed_from_hex(value);
            have_seed = true;
        } else {
            throw ConfigError("profile: unknown key '" + std::string(key) + "'");
        }
    }
    if (!have_seed) throw ConfigError("profile: missing seed");
    for (int j = 0; j < p.tag_bits; ++j) {
        auto it = bits.find(j);
        if (it == bits.end()) throw ConfigError("profile: missing bit " + std::to_string(j));
        p.bit_deps.push_back(it->second);
    }
    if (bits.size() != static_cast<std::size_t>(p.tag_bits)) {
        throw ConfigError("profile: bit index out of range");
    }
    validate_profile(p);
    return p;
}

}  // namespace promac
