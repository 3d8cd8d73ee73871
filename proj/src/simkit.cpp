#include "promac/simkit.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "promac/analysis.hpp"
#include "promac/errors.hpp"
#include "promac/ledger.hpp"

namespace promac {

GilbertElliot GilbertElliot::preset(std::string_view name) {
    if (name == "low-error") return low_error();
    if (name == "high-error") return high_error();
    if (name == "lossless") return {0.0, 1.0, 0.0, 0.0};
    throw ConfigError("unknown channel preset '" + std::string(name) + "'");
}

void GilbertElliot::validate() const {
    for (double v : {p, r, err_good, err_bad}) {
        if (!(v >= 0.0 && v <= 1.0)) throw ConfigError("Gilbert-Elliot parameters must lie in [0, 1]");
    }
}

double GilbertElliot::pi_bad() const {
    validate();
    if (p + r == 0.0) throw ConfigError("p + r = 0 leaves the stationary distribution undefined");
    return p / (p + r);
}

double ge_stationary_per(const GilbertElliot& model) {
    const double pb = model.pi_bad();
    return pb * model.err_bad + (1.0 - pb) * model.err_good;
}

std::vector<std::uint8_t> ge_loss_sequence(const GilbertElliot& model, std::size_t length, Rng& rng) {
    model.validate();
    std::vector<std::uint8_t> lost(length, 0);
    bool bad = false;
    for (std::size_t i = 0; i < length; ++i) {
        lost[i] = rng.bernoulli(bad ? model.err_bad : model.err_good) ? 1 : 0;
        bad = bad ? !rng.bernoulli(model.r) : rng.bernoulli(model.p);
    }
    return lost;
}

void TrialPlan::validate() const {
    if (runs < 2) throw ConfigError("runs must be at least 2 for a confidence interval");
    if (events < 1) throw ConfigError("events must be positive");
    if (!(confidence > 0.0 && confidence < 1.0)) throw ConfigError("confidence must be in (0, 1)");
}

namespace {

Estimate summarize(std::vector<double> per_run, double confidence) {
    Estimate e;
    e.mean = mean(per_run);
    e.ci = ci_halfwidth(per_run, confidence);
    e.per_run = std::move(per_run);
    return e;
}

Bytes payload_for(std::uint64_t seq) {
    Bytes b(8);
    for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(seq >> (56 - 8 * i));
    return b;
}

bool is_window(const DependencyLayout& layout) {
    const auto units = layout.units();
    if (units.size() != 1) return false;
    const auto& d = units.front().offsets;
    return d.order() > 1 && d.length() + 1 == d.order();
}

}  // namespace

ProfileSeed derive_profile_seed(std::uint64_t seed) {
    ProfileSeed out{};
    std::uint64_t x = seed ^ 0x70726F66696C65ULL;
    for (std::size_t i = 0; i < out.size(); i += 8) {
        x = splitmix64(x);
        for (std::size_t b = 0; b < 8; ++b) out[i + b] = static_cast<std::uint8_t>(x >> (56 - 8 * b));
    }
    return out;
}

Key derive_key(std::uint64_t seed) {
    Bytes bytes(32);
    std::uint64_t x = seed ^ 0x6B6579ULL;
    for (std::size_t i = 0; i < bytes.size(); i += 8) {
        x = splitmix64(x);
        for (std::size_t b = 0; b < 8; ++b) bytes[i + b] = static_cast<std::uint8_t>(x >> (56 - 8 * b));
    }
    return Key(std::move(bytes));
}

ChannelResult run_channel_experiment(const SchemeConfig& scheme, const GilbertElliot& model, const TrialPlan& plan) {
    plan.validate();
    scheme.validate();
    model.validate();
    const Key key = derive_key(plan.seed);
    const auto warm = static_cast<std::uint64_t>(scheme.max_delay());
    const auto counted = static_cast<std::uint64_t>(plan.events);
    const std::uint64_t total = warm + counted + warm;

    ChannelResult result;
    result.min_accrued = scheme.security_bits;
    std::vector<double> per_run;
    for (int run = 0; run < plan.runs; ++run) {
        Rng rng(plan.seed, static_cast<std::uint64_t>(run));
        const auto lost = ge_loss_sequence(model, total, rng);
        auto signer = make_signer(scheme, key);
        ReceiverLedger ledger(scheme, key);
        std::uint64_t received = 0;
        std::uint64_t zero = 0;
        auto tally = [&](const MessageStatus& m) {
            if (m.lost || m.seq < warm || m.seq >= warm + counted) return;
            ++received;
            if (m.accrued == 0) ++zero;
            result.min_accrued = std::min(result.min_accrued, m.accrued);
        };
        for (std::uint64_t s = 0; s < total; ++s) {
            auto packet = signer->sign(payload_for(s));
            if (lost[s]) continue;
            for (const auto& m : ledger.receive(packet).finalized) tally(m);
        }
        for (const auto& m : ledger.finish()) tally(m);
        result.received += received;
        result.zero_accrued += zero;
        per_run.push_back(received == 0 ? 0.0 : static_cast<double>(zero) / static_cast<double>(received));
    }
    result.unverifiable = summarize(std::move(per_run), plan.confidence);
    return result;
}

Estimate run_jammer_experiment(const DependencyLayout& layout, double q, const TrialPlan& plan) {
    plan.validate();
    if (!(q >= 0.0 && q <= 1.0)) throw ConfigError("q must be in [0, 1]");
    const CoverMap map(layout);
    std::vector<double> per_run;
    for (int run = 0; run < plan.runs; ++run) {
        Rng rng(plan.seed, static_cast<std::uint64_t>(run));
        int success = 0;
        for (int e = 0; e < plan.events; ++e) {
            InstanceMask dead;
            for (int rel : map.killers()) {
                if (rng.bernoulli(q)) dead |= map.kills(rel);
            }
            if (map.security(dead) == 0) ++success;
        }
        per_run.push_back(static_cast<double>(success) / plan.events);
    }
    return summarize(std::move(per_run), plan.confidence);
}

Estimate run_predictor_experiment(const DependencyLayout& layout, const GilbertElliot& model, double alpha,
                                  const TrialPlan& plan) {
    plan.validate();
    model.validate();
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw ConfigError("alpha must be in [0, 1]");
    const CoverMap map(layout);
    const int reach = map.max_delay();
    const bool window = is_window(layout);
    // Slots relative to the forgery at 0; the predicted slot is -1.
    const int first = -std::max(reach, 1);
    const int last = std::max(reach, 1);
    std::vector<std::uint8_t> bad(static_cast<std::size_t>(last - first + 1));
    auto at = [&](int rel) -> std::uint8_t& { return bad[static_cast<std::size_t>(rel - first)]; };

    std::vector<double> per_run;
    for (int run = 0; run < plan.runs; ++run) {
        Rng rng(plan.seed, static_cast<std::uint64_t>(run));
        int success = 0;
        for (int e = 0; e < plan.events; ++e) {
            at(-1) = rng.bernoulli(alpha) ? 1 : 0;
            for (int rel = -2; rel >= first; --rel) {
                at(rel) = at(rel + 1) ? !rng.bernoulli(model.r) : rng.bernoulli(model.p);
            }
            for (int rel = 0; rel <= last; ++rel) {
                at(rel) = at(rel - 1) ? !rng.bernoulli(model.r) : rng.bernoulli(model.p);
            }
            bool left = false;
            bool right = false;
            InstanceMask dead;
            for (int rel = first; rel <= last; ++rel) {
                if (rel == 0) continue;
                if (!rng.bernoulli(at(rel) ? model.err_bad : model.err_good)) continue;
                (rel < 0 ? left : right) = true;
                dead |= map.kills(rel);
            }
            const bool hit = window ? (left && right) : map.security(dead) == 0;
            if (hit) ++success;
        }
        per_run.push_back(static_cast<double>(success) / plan.events);
    }
    return summarize(std::move(per_run), plan.confidence);
}

// ---------------------------------------------------------------------------
// DoS comparison

std::string_view dos_scheme_name(DosScheme scheme) {
    switch (scheme) {
        case DosScheme::Traditional: return "traditional";
        case DosScheme::Aggregated: return "aggregated";
        case DosScheme::ShiftedXor: return "shifted-xor";
        case DosScheme::Window: return "window";
        case DosScheme::SpMac: return "spmac";
    }
    return "unknown";
}

DosScheme parse_dos_scheme(std::string_view name) {
    for (auto s : {DosScheme::Traditional, DosScheme::Aggregated, DosScheme::ShiftedXor, DosScheme::Window,
                   DosScheme::SpMac}) {
        if (dos_scheme_name(s) == name) return s;
    }
    throw ConfigError("unknown DoS scheme '" + std::string(name) + "'");
}

DosSetup default_dos_setup(std::uint64_t seed) {
    DosSetup setup;
    setup.window = DependencyLayout::window(8, 16);
    const auto profile = build_profile(16, 128, 1, 0, 64, derive_profile_seed(seed));
    setup.spmac = DependencyLayout::from_bits(profile.bit_deps);
    return setup;
}

namespace {

struct DosScore {
    int discarded = 0;
    long potential = 0;
};

class DosEvaluator {
public:
    DosEvaluator(DosScheme scheme, const DosSetup& setup) : scheme_(scheme), setup_(setup) {
        if (setup.batch < 1 || setup.stream < 1) throw ConfigError("batch and stream must be positive");
        if (scheme == DosScheme::Window) map_.emplace(setup.window);
        if (scheme == DosScheme::SpMac) map_.emplace(setup.spmac);
    }

    // Smallest first drop that covers every case up to translation.
    int period() const {
        switch (scheme_) {
            case DosScheme::Aggregated:
            case DosScheme::ShiftedXor: return std::min(setup_.batch, setup_.stream);
            default: return 1;
        }
    }

    DosScore score(std::vector<int> dropped) const {
        std::sort(dropped.begin(), dropped.end());
        DosScore s;
        if (dropped.empty() || scheme_ == DosScheme::Traditional) return s;
        if (!map_) {
            // One drop voids the whole batch; its tag needs every member.
            for (std::size_t i = 0; i < dropped.size();) {
                const int batch = dropped[i] / setup_.batch;
                int in_batch = 0;
                while (i < dropped.size() && dropped[i] / setup_.batch == batch) {
                    ++in_batch;
                    ++i;
                }
                s.discarded += setup_.batch - in_batch;
                s.potential += static_cast<long>(setup_.batch - in_batch) * setup_.security_bits;
            }
            return s;
        }
        const int reach = map_->max_delay();
        const int full = std::min(map_->full_security(), setup_.security_bits);
        for (int m = dropped.front() - reach; m <= dropped.back() + reach; ++m) {
            if (std::binary_search(dropped.begin(), dropped.end(), m)) continue;
            InstanceMask dead;
            for (int x : dropped) dead |= map_->kills(x - m);
            const int sec = std::min(map_->security(dead), setup_.security_bits);
            if (sec < setup_.threshold) ++s.discarded;
            s.potential += static_cast<long>(full - sec) * (full - sec);
        }
        return s;
    }

private:
    DosScheme scheme_;
    const DosSetup& setup_;
    std::optional<CoverMap> map_;
};

}  // namespace

int dos_discards(DosScheme scheme, const std::vector<int>& dropped, const DosSetup& setup) {
    return DosEvaluator(scheme, setup).score(dropped).discarded;
}

DosResult run_dos_comparison(DosScheme scheme, int drops, const DosSetup& setup) {
    if (drops < 0) throw ConfigError("drops must be non-negative");
    if (drops > setup.stream) throw ConfigError("more drops than attackable packets");
    const DosEvaluator eval(scheme, setup);
    DosResult result;
    if (drops == 0) {
        result.exact = true;
        return result;
    }
    if (drops <= 4) {
        result.exact = true;
        result.discarded = -1;
        std::vector<int> chosen;
        auto recurse = [&](auto&& self, int from) -> void {
            if (static_cast<int>(chosen.size()) == drops) {
                const int d = eval.score(chosen).discarded;
                if (d > result.discarded) {
                    result.discarded = d;
                    result.dropped = chosen;
                }
                return;
            }
            const int to = chosen.empty() ? eval.period() : setup.stream;
            const int need = drops - static_cast<int>(chosen.size());
            for (int x = from; x < to && x <= setup.stream - need; ++x) {
                chosen.push_back(x);
                self(self, x + 1);
                chosen.pop_back();
            }
        };
        recurse(recurse, 0);
        return result;
    }
    std::vector<int> chosen;
    for (int step = 0; step < drops; ++step) {
        int pick = -1;
        DosScore best{-1, -1};
        for (int x = 0; x < setup.stream; ++x) {
            if (std::find(chosen.begin(), chosen.end(), x) != chosen.end()) continue;
            chosen.push_back(x);
            const auto s = eval.score(chosen);
            chosen.pop_back();
            if (s.discarded > best.discarded || (s.discarded == best.discarded && s.potential > best.potential)) {
                best = s;
                pick = x;
            }
        }
        chosen.push_back(pick);
    }
    std::sort(chosen.begin(), chosen.end());
    result.discarded = eval.score(chosen).discarded;
    result.dropped = std::move(chosen);
    return result;
}

}  // namespace promac
