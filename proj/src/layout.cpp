#include "promac/layout.hpp"

#include <algorithm>
#include <numeric>

#include "promac/errors.hpp"

namespace promac {

DependencyLayout::DependencyLayout(std::vector<TagUnit> units) : units_(std::move(units)) {
    if (units_.empty()) throw ConfigError("layout needs at least one tag unit");
    for (const auto& u : units_) {
        if (u.width < 1) throw ConfigError("tag unit width must be positive");
        tag_bits_ += u.width;
        full_security_ += u.width * u.offsets.order();
        max_delay_ = std::max(max_delay_, u.offsets.length());
    }
}

DependencyLayout DependencyLayout::from_bits(const BitDependencies& deps) {
    std::vector<TagUnit> units;
    units.reserve(deps.size());
    for (const auto& d : deps) units.push_back({1, d});
    return DependencyLayout(std::move(units));
}

DependencyLayout DependencyLayout::window(int n, int tag_bits) {
    if (n < 1) throw ConfigError("window size must be positive");
    return DependencyLayout({TagUnit{tag_bits, MarkSet::window(n)}});
}

DependencyLayout DependencyLayout::truncated(int tag_bits) {
    return DependencyLayout({TagUnit{tag_bits, MarkSet({0})}});
}

int window_size(int security_bits, int tag_bits) {
    if (security_bits < 1 || tag_bits < 1) {
        throw ConfigError("security_bits and tag_bits must be positive");
    }
    return (security_bits + tag_bits - 1) / tag_bits;
}

CoverMap::CoverMap(const DependencyLayout& layout) : max_delay_(layout.max_delay()) {
    by_offset_.assign(static_cast<std::size_t>(2 * max_delay_ + 1), InstanceMask{});
    for (const auto& unit : layout.units()) {
        for (int d : unit.offsets) {
            // Tag target+d covers the target; it needs messages target+d-e.
            const auto id = weights_.size();
            if (id >= kMaxCoverInstances) {
                throw ConfigError("layout has more than " + std::to_string(kMaxCoverInstances) +
                                  " covering instances");
            }
            weights_.push_back(unit.width);
            by_offset_[static_cast<std::size_t>(d + max_delay_)].set(id);
            for (int e : unit.offsets) {
                by_offset_[static_cast<std::size_t>(d - e + max_delay_)].set(id);
            }
        }
    }
    full_ = std::accumulate(weights_.begin(), weights_.end(), 0);
    uniform_ = std::all_of(weights_.begin(), weights_.end(),
                           [&](int w) { return w == weights_.front(); });
    for (int rel = -max_delay_; rel <= max_delay_; ++rel) {
        if (rel != 0 && by_offset_[static_cast<std::size_t>(rel + max_delay_)].any()) {
            killers_.push_back(rel);
        }
    }
}

const InstanceMask& CoverMap::kills(int rel) const {
    static const InstanceMask none;
    if (rel == 0 || rel < -max_delay_ || rel > max_delay_) return none;
    return by_offset_[static_cast<std::size_t>(rel + max_delay_)];
}

int CoverMap::security(const InstanceMask& dead) const {
    if (uniform_) {
        const auto alive = weights_.size() - (dead.count());
        return static_cast<int>(alive) * (weights_.empty() ? 0 : weights_.front());
    }
    int total = 0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (!dead.test(i)) total += weights_[i];
    }
    return total;
}

int CoverMap::security_after(std::span<const int> dropped) const {
    InstanceMask dead;
    for (int rel : dropped) dead |= kills(rel);
    return security(dead);
}

std::vector<int> accrued_over_stream(const DependencyLayout& layout, std::span<const std::uint8_t> lost) {
    const auto n = static_cast<std::int64_t>(lost.size());
    std::vector<int> accrued(lost.size(), 0);
    auto is_lost = [&](std::int64_t s) { return s >= 0 && lost[static_cast<std::size_t>(s)] != 0; };
    for (std::int64_t p = 0; p < n; ++p) {
        if (is_lost(p)) continue;
        for (const auto& unit : layout.units()) {
            bool verifiable = true;
            for (int d : unit.offsets) {
                if (is_lost(p - d)) {
                    verifiable = false;
                    break;
                }
            }
            if (!verifiable) continue;
            for (int d : unit.offsets) {
                if (p - d >= 0) accrued[static_cast<std::size_t>(p - d)] += unit.width;
            }
        }
    }
    return accrued;
}

}  // namespace promac
