#include "promac/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>

#include "promac/errors.hpp"

namespace promac {

std::vector<int> delay_curve(const DependencyLayout& layout, int horizon, int security_bits) {
    if (horizon < 0) throw ConfigError("horizon must be non-negative");
    std::vector<int> curve(static_cast<std::size_t>(horizon) + 1, 0);
    for (const auto& unit : layout.units()) {
        for (int d : unit.offsets) {
            for (int k = d; k <= horizon; ++k) curve[static_cast<std::size_t>(k)] += unit.width;
        }
    }
    for (auto& v : curve) v = std::min(v, security_bits);
    return curve;
}

int full_security_delay(const DependencyLayout& layout, int security_bits) {
    const auto curve = delay_curve(layout, layout.max_delay(), security_bits);
    const int target = std::min(layout.full_security(), security_bits);
    const auto it = std::find_if(curve.begin(), curve.end(), [&](int v) { return v >= target; });
    return static_cast<int>(it - curve.begin());
}

namespace {

// Progressive orders of a profile with how many bits use each.
std::map<int, int> order_counts(int tag_bits, int security_bits, int immediate_bits) {
    std::map<int, int> counts;
    const auto orders = profile_orders(tag_bits, security_bits, immediate_bits);
    for (std::size_t j = static_cast<std::size_t>(immediate_bits); j < orders.size(); ++j) ++counts[orders[j]];
    return counts;
}

const std::vector<MarkSet>& checked_pool(int order, int g, int pool_size, int needed) {
    const auto& pool = dependency_pool(order, g, pool_size);
    if (static_cast<int>(pool.sets.size()) < needed) {
        throw InfeasibleError("pool of order " + std::to_string(order) + " holds only " +
                              std::to_string(pool.sets.size()) + " sets");
    }
    return pool.sets;
}

}  // namespace

Band delay_band(int tag_bits, int security_bits, int g, int immediate_bits, int pool_size, int horizon) {
    if (horizon < 0) throw ConfigError("horizon must be non-negative");
    const auto counts = order_counts(tag_bits, security_bits, immediate_bits);
    const auto size = static_cast<std::size_t>(horizon) + 1;
    Band band{std::vector<int>(size, immediate_bits), std::vector<int>(size, immediate_bits)};
    for (const auto& [order, count] : counts) {
        const auto& sets = checked_pool(order, g, pool_size, count);
        std::vector<int> reached(sets.size());
        for (std::size_t k = 0; k < size; ++k) {
            for (std::size_t s = 0; s < sets.size(); ++s) {
                reached[s] = static_cast<int>(std::upper_bound(sets[s].begin(), sets[s].end(), static_cast<int>(k)) -
                                              sets[s].begin());
            }
            std::sort(reached.begin(), reached.end());
            band.lo[k] += std::accumulate(reached.begin(), reached.begin() + count, 0);
            band.hi[k] += std::accumulate(reached.end() - count, reached.end(), 0);
        }
    }
    for (std::size_t k = 0; k < size; ++k) {
        band.lo[k] = std::min(band.lo[k], security_bits);
        band.hi[k] = std::min(band.hi[k], security_bits);
    }
    return band;
}

// ---------------------------------------------------------------------------
// Resilience

namespace {

class DropSearch {
public:
    DropSearch(const CoverMap& map, int drops) : map_(map), drops_(drops) {
        for (int rel : map.killers()) {
            killers_.push_back(rel);
            masks_.push_back(map.kills(rel));
        }
    }

    ResilienceResult exact() {
        best_ = map_.security({});
        best_set_.clear();
        std::vector<int> chosen;
        recurse(0, InstanceMask{}, chosen);
        return {best_, best_set_, true};
    }

    ResilienceResult greedy() {
        InstanceMask dead;
        std::vector<int> chosen;
        int current = map_.security(dead);
        for (int step = 0; step < drops_ && current > 0; ++step) {
            int best = current;
            std::size_t pick = killers_.size();
            for (std::size_t i = 0; i < killers_.size(); ++i) {
                if (std::find(chosen.begin(), chosen.end(), killers_[i]) != chosen.end()) continue;
                const int s = map_.security(dead | masks_[i]);
                if (s < best) {
                    best = s;
                    pick = i;
                }
            }
            if (pick == killers_.size()) break;
            dead |= masks_[pick];
            chosen.push_back(killers_[pick]);
            current = best;
        }
        std::sort(chosen.begin(), chosen.end());
        return {current, chosen, false};
    }

private:
    void recurse(std::size_t start, const InstanceMask& dead, std::vector<int>& chosen) {
        const int current = map_.security(dead);
        if (current < best_) {
            best_ = current;
            best_set_ = chosen;
        }
        const int left = drops_ - static_cast<int>(chosen.size());
        if (left == 0 || current == 0) return;

        std::vector<std::pair<int, std::size_t>> gains;
        for (std::size_t i = start; i < killers_.size(); ++i) {
            const int gain = current - map_.security(dead | masks_[i]);
            if (gain > 0) gains.emplace_back(gain, i);
        }
        // Losses never exceed the sum of the individual losses.
        std::vector<int> top;
        for (const auto& g : gains) top.push_back(g.first);
        const auto take = std::min<std::size_t>(static_cast<std::size_t>(left), top.size());
        std::partial_sort(top.begin(), top.begin() + static_cast<std::ptrdiff_t>(take), top.end(), std::greater<>());
        if (current - std::accumulate(top.begin(), top.begin() + static_cast<std::ptrdiff_t>(take), 0) >= best_) return;

        for (const auto& [gain, i] : gains) {
            chosen.push_back(killers_[i]);
            recurse(i + 1, dead | masks_[i], chosen);
            chosen.pop_back();
            if (best_ == 0) return;
        }
    }

    const CoverMap& map_;
    int drops_;
    std::vector<int> killers_;
    std::vector<InstanceMask> masks_;
    int best_ = 0;
    std::vector<int> best_set_;
};

}  // namespace

ResilienceResult worst_case_resilience(const ResilienceQuery& query) {
    if (query.drops < 0) throw ConfigError("drops must be non-negative");
    const int needed = 2 * query.layout.max_delay() + 1;
    if (query.horizon != 0 && query.horizon < needed) {
        throw ConfigError("horizon " + std::to_string(query.horizon) + " is below 2 * max_delay + 1 = " +
                          std::to_string(needed));
    }
    const CoverMap map(query.layout);
    DropSearch search(map, query.drops);
    const bool exact = query.mode == SearchMode::Exact || (query.mode == SearchMode::Auto && query.drops <= 4);
    auto result = exact ? search.exact() : search.greedy();
    result.security = std::min(result.security, query.security_bits);
    return result;
}

// ---------------------------------------------------------------------------
// Memory

namespace {
int packed_bytes(long bits) { return static_cast<int>((bits + 7) / 8); }
}  // namespace

int spmac_memory(const BitDependencies& deps) {
    const long depth = profile_max_delay(deps) + 1;
    return 2 * packed_bytes(depth * static_cast<long>(deps.size()));
}

MemoryRange memory_model(SchemeKind scheme, int tag_bits, int security_bits, int msg_len, const PoolParams& pool) {
    if (tag_bits < 1 || security_bits < 1 || tag_bits > security_bits) {
        throw ConfigError("need 1 <= tag_bits <= security_bits");
    }
    if (msg_len < 0) throw ConfigError("msg_len must be non-negative");
    const int n = window_size(security_bits, tag_bits);
    auto fixed = [](int bytes) { return MemoryRange{bytes, bytes}; };
    switch (scheme) {
        case SchemeKind::Whips: return fixed(n * 32);
        case SchemeKind::MiniMac: return fixed(n * msg_len);
        case SchemeKind::CuMac:
            if (security_bits % tag_bits != 0) {
                throw ConfigError("CuMAC needs security_bits divisible by tag_bits");
            }
            return fixed(packed_bytes(security_bits));
        case SchemeKind::Truncated: return fixed(0);
        case SchemeKind::SpMac: break;
    }
    int best = 0;
    int worst = 0;
    for (const auto& [order, count] : order_counts(tag_bits, security_bits, pool.immediate_bits)) {
        const auto& sets = checked_pool(order, pool.g, pool.pool_size, count);
        best = std::max(best, sets[static_cast<std::size_t>(count - 1)].length());
        int longest = 0;
        for (const auto& s : sets) longest = std::max(longest, s.length());
        worst = std::max(worst, longest);
    }
    auto bytes = [&](int delay) { return 2 * packed_bytes(static_cast<long>(delay + 1) * tag_bits); };
    return {bytes(best), bytes(worst)};
}

// ---------------------------------------------------------------------------
// Jamming

namespace {

// Single unit over {0..n-1}: returns n, else 0.
int window_length(const DependencyLayout& layout) {
    const auto units = layout.units();
    if (units.size() != 1) return 0;
    const auto& d = units.front().offsets;
    return d.length() + 1 == d.order() ? d.order() : 0;
}

void check_q(double q) {
    if (!(q >= 0.0 && q <= 1.0)) throw ConfigError("q must be in [0, 1]");
}

}  // namespace

double jam_success_probability(const DependencyLayout& layout, double q, std::size_t state_cap) {
    check_q(q);
    if (const int n = window_length(layout); n > 0) {
        // Nearest left drop at distance a, then any right drop within n - a.
        double total = 0.0;
        for (int a = 1; a < n; ++a) {
            total += q * std::pow(1.0 - q, a - 1) * (1.0 - std::pow(1.0 - q, n - a));
        }
        return total;
    }
    const CoverMap map(layout);
    const auto killers = map.killers();
    InstanceMask all;
    for (int i = 0; i < map.instance_count(); ++i) all.set(static_cast<std::size_t>(i));

    std::vector<InstanceMask> reach(killers.size() + 1);
    for (std::size_t i = killers.size(); i-- > 0;) reach[i] = reach[i + 1] | map.kills(killers[i]);
    if ((reach[0] & all) != all) return 0.0;

    std::unordered_map<InstanceMask, double> states{{InstanceMask{}, 1.0}};
    for (std::size_t i = 0; i < killers.size(); ++i) {
        const auto& kill = map.kills(killers[i]);
        std::unordered_map<InstanceMask, double> next;
        next.reserve(states.size() * 2);
        for (const auto& [mask, p] : states) {
            const InstanceMask hit = mask | kill;
            if (((hit | reach[i + 1]) & all) == all) next[hit] += p * q;
            if (((mask | reach[i + 1]) & all) == all) next[mask] += p * (1.0 - q);
        }
        if (next.size() > state_cap) {
            throw InfeasibleError("jam analysis exceeds " + std::to_string(state_cap) + " states");
        }
        states = std::move(next);
    }
    const auto it = states.find(all);
    return it == states.end() ? 0.0 : it->second;
}

double jam_success_enumerated(const DependencyLayout& layout, double q) {
    check_q(q);
    const CoverMap map(layout);
    const auto killers = map.killers();
    if (killers.size() > 24) throw ConfigError("enumeration limited to 24 candidate positions");
    double total = 0.0;
    const std::uint32_t patterns = 1U << killers.size();
    for (std::uint32_t bits = 0; bits < patterns; ++bits) {
        InstanceMask dead;
        double p = 1.0;
        for (std::size_t i = 0; i < killers.size(); ++i) {
            if (bits >> i & 1U) {
                dead |= map.kills(killers[i]);
                p *= q;
            } else {
                p *= 1.0 - q;
            }
        }
        if (map.security(dead) == 0) total += p;
    }
    return total;
}

OperationCount operation_count(SchemeKind scheme, int tag_bits, int msg_len, int security_bits, int window) {
    if (tag_bits < 1 || msg_len < 0) throw ConfigError("need tag_bits >= 1 and msg_len >= 0");
    const int n = window > 0 ? window : window_size(security_bits, tag_bits);
    const int words = (tag_bits + 63) / 64;
    switch (scheme) {
        case SchemeKind::Whips: return {2, (1 + msg_len) + (1 + 8 + 32 * n), 0};
        case SchemeKind::CuMac: return {1, 8 + msg_len, n * words};
        case SchemeKind::SpMac: return {1, 8 + msg_len, words};
        case SchemeKind::Truncated: return {1, 8 + msg_len, 0};
        case SchemeKind::MiniMac: return {1, 8 + n * (2 + msg_len), 0};
    }
    throw ConfigError("unknown scheme");
}

}  // namespace promac
