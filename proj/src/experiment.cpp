#include "promac/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "promac/analysis.hpp"
#include "promac/depsets.hpp"
#include "promac/errors.hpp"
#include "promac/schemes.hpp"
#include "promac/simkit.hpp"

namespace promac {

namespace {

const std::vector<std::string> kScenarios = {"delay", "resilience", "memory", "jam",
                                             "channel", "predictor", "dos", "deps"};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view value) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= value.size()) {
        const auto comma = value.find(',', start);
        const auto end = comma == std::string_view::npos ? value.size() : comma;
        auto item = trim(value.substr(start, end - start));
        if (item.empty()) throw ConfigError("empty item in list '" + std::string(value) + "'");
        out.push_back(std::move(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
    const auto s = trim(text);
    T value{};
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc() || ptr != end) {
        throw ConfigError("invalid value '" + std::string(text) + "' for " + std::string(key));
    }
    return value;
}

template <typename T>
std::vector<T> parse_numbers(std::string_view key, std::string_view text) {
    std::vector<T> out;
    for (const auto& item : split_list(text)) out.push_back(parse_number<T>(key, item));
    return out;
}

bool is_analysis_scheme(std::string_view s) {
    return s == "truncated" || s == "window" || s == "golomb" || s == "sidon" || s == "r2d2" || s == "whips" ||
           s == "cumac" || s == "minimac";
}

}  // namespace

const std::vector<std::string>& setting_keys() {
    static const std::vector<std::string> keys = {
        "scenario", "scheme", "tag-bits", "g",      "immediate-bits", "pool",    "preset",
        "p",        "r",      "eg",       "eb",     "q",              "alpha",   "drops",
        "runs",     "events", "seed",     "out",    "order",          "count",   "max-loss",
        "security-bits", "horizon", "msg-len", "max-length"};
    return keys;
}

void apply_setting(ExperimentSpec& spec, std::string_view key, std::string_view value) {
    const auto v = trim(value);
    if (key == "scenario") {
        spec.scenario = v;
    } else if (key == "scheme") {
        spec.schemes = split_list(v);
    } else if (key == "tag-bits") {
        spec.tag_bits = parse_numbers<int>(key, v);
    } else if (key == "g") {
        spec.g = parse_number<int>(key, v);
    } else if (key == "immediate-bits") {
        spec.immediate_bits = parse_numbers<int>(key, v);
    } else if (key == "pool") {
        spec.pool_size = parse_number<int>(key, v);
    } else if (key == "preset") {
        spec.presets = split_list(v);
    } else if (key == "p") {
        spec.p = parse_number<double>(key, v);
    } else if (key == "r") {
        spec.r = parse_number<double>(key, v);
    } else if (key == "eg") {
        spec.eg = parse_number<double>(key, v);
    } else if (key == "eb") {
        spec.eb = parse_number<double>(key, v);
    } else if (key == "q") {
        spec.q = parse_numbers<double>(key, v);
    } else if (key == "alpha") {
        spec.alpha = parse_numbers<double>(key, v);
    } else if (key == "drops") {
        spec.drops = parse_number<int>(key, v);
    } else if (key == "runs") {
        spec.runs = parse_number<int>(key, v);
    } else if (key == "events") {
        spec.events = parse_number<int>(key, v);
    } else if (key == "seed") {
        spec.seed = parse_number<std::uint64_t>(key, v);
    } else if (key == "out") {
        spec.out = v;
    } else if (key == "order") {
        spec.order = parse_number<int>(key, v);
    } else if (key == "count") {
        spec.count = parse_number<int>(key, v);
    } else if (key == "max-loss") {
        spec.max_loss = parse_number<int>(key, v);
    } else if (key == "security-bits") {
        spec.security_bits = parse_number<int>(key, v);
    } else if (key == "horizon") {
        spec.horizon = parse_number<int>(key, v);
    } else if (key == "max-length") {
        spec.max_length = parse_number<int>(key, v);
    } else if (key == "msg-len") {
        spec.msg_len = parse_numbers<int>(key, v);
    } else {
        throw ConfigError("unknown setting '" + std::string(key) + "'");
    }
}

void apply_config_text(ExperimentSpec& spec, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto content = trim(line);
        if (content.empty()) continue;
        const auto eq = content.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(number) + ": expected key = value");
        }
        apply_setting(spec, trim(std::string_view(content).substr(0, eq)),
                      std::string_view(content).substr(eq + 1));
    }
}

void ExperimentSpec::complete() {
    const auto& s = scenario;
    if (schemes.empty()) {
        if (s == "memory") {
            schemes = {"whips", "minimac", "cumac", "spmac"};
        } else if (s == "dos") {
            schemes = {"traditional", "aggregated", "shifted-xor", "window", "spmac"};
        } else if (s == "jam" || s == "predictor") {
            schemes = {"window"};
        } else if (s != "deps") {
            schemes = {"window", "r2d2"};
        }
    }
    if (tag_bits.empty()) {
        if (s == "memory") {
            tag_bits = {8, 10, 12, 16, 20, 24, 32, 40, 48, 56, 64};
        } else if (s == "dos") {
            tag_bits = {16};
        } else {
            tag_bits = {8, 16, 32};
        }
    }
    const bool custom = p || r || eg || eb;
    if (presets.empty() && !custom) presets = {"low-error", "high-error"};
    if (q.empty()) q = {0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.976, 0.99, 0.999};
    if (alpha.empty()) {
        for (int i = 0; i <= 10; ++i) alpha.push_back(i / 10.0);
    }
}

std::uint64_t ExperimentSpec::effective_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("PROMAC_SEED"); env != nullptr && *env != '\0') {
        return parse_number<std::uint64_t>("PROMAC_SEED", env);
    }
    return 1;
}

void ExperimentSpec::validate() const {
    if (std::find(kScenarios.begin(), kScenarios.end(), scenario) == kScenarios.end()) {
        throw ConfigError("unknown scenario '" + scenario + "'");
    }
    if (security_bits < 1 || security_bits > 256) throw ConfigError("security-bits must be in 1..256");
    for (int t : tag_bits) {
        if (t < 1 || t > security_bits) throw ConfigError("tag-bits must be in 1..security-bits");
    }
    if (immediate_bits.size() != 1 && immediate_bits.size() != tag_bits.size()) {
        throw ConfigError("immediate-bits needs one value or one per tag size");
    }
    for (std::size_t i = 0; i < immediate_bits.size(); ++i) {
        const int imm = immediate_bits[i];
        const int tag = immediate_bits.size() == 1 ? *std::min_element(tag_bits.begin(), tag_bits.end())
                                                   : tag_bits[i];
        if (imm < 0 || imm >= tag) throw ConfigError("immediate-bits must be in 0..tag-bits-1");
    }
    if (g && *g < 1) throw ConfigError("g must be positive");
    if (max_loss < 1) throw ConfigError("max-loss must be positive");
    if (pool_size < 1) throw ConfigError("pool must be positive");
    if (drops < 0) throw ConfigError("drops must be non-negative");
    if (runs < 2) throw ConfigError("runs must be at least 2");
    if (events < 1) throw ConfigError("events must be positive");
    if (order < 1) throw ConfigError("order must be positive");
    if (count < 1) throw ConfigError("count must be positive");
    if (max_length < 1) throw ConfigError("max-length must be positive");
    if (horizon < 0) throw ConfigError("horizon must be non-negative");
    for (double v : q) {
        if (!(v >= 0.0 && v <= 1.0)) throw ConfigError("q must be in [0, 1]");
    }
    for (double v : alpha) {
        if (!(v >= 0.0 && v <= 1.0)) throw ConfigError("alpha must be in [0, 1]");
    }
    if (msg_len.size() != 2 || msg_len[0] < 0 || msg_len[1] < msg_len[0]) {
        throw ConfigError("msg-len needs two non-negative sizes, smallest first");
    }
    const int custom = (p ? 1 : 0) + (r ? 1 : 0) + (eg ? 1 : 0) + (eb ? 1 : 0);
    if (custom != 0 && custom != 4) throw ConfigError("a custom channel needs all of p, r, eg and eb");
    if (custom == 4) GilbertElliot{*p, *r, *eg, *eb}.pi_bad();
    for (const auto& name : presets) GilbertElliot::preset(name);
    for (const auto& name : schemes) {
        if (scenario == "memory") {
            if (name != "spmac") parse_scheme_kind(name);
        } else if (scenario == "dos") {
            parse_dos_scheme(name);
        } else if (!is_analysis_scheme(name)) {
            throw ConfigError("unknown scheme '" + name + "' for scenario " + scenario);
        }
    }
}

// ---------------------------------------------------------------------------

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string CsvTable::render() const {
    std::string out;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i != 0) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw ConfigError("cannot write " + tmp.string());
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!f) throw ConfigError("cannot write " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw ConfigError("cannot move output into place: " + ec.message());
    }
}

// ---------------------------------------------------------------------------

namespace {

struct Variant {
    std::string scheme;
    int tag = 0;
    int g = 0;    ///< 0 when the scheme has no g
    int imm = 0;
    DependencyLayout layout;
    std::optional<SchemeConfig> config;
};

int default_g(const ExperimentSpec& spec, int tag, int imm) {
    if (spec.g) return *spec.g;
    const int progressive = tag - imm;
    return std::max(1, spec.max_loss / std::max(progressive, 1));
}

std::vector<std::pair<int, int>> tag_imm_pairs(const ExperimentSpec& spec) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < spec.tag_bits.size(); ++i) {
        out.emplace_back(spec.tag_bits[i], spec.immediate_bits.size() == 1 ? spec.immediate_bits[0]
                                                                            : spec.immediate_bits[i]);
    }
    return out;
}

Variant resolve(const ExperimentSpec& spec, const std::string& scheme, int tag, int imm) {
    const int sec = spec.security_bits;
    Variant v{scheme, tag, 0, 0, {}, std::nullopt};
    const int n = window_size(sec, tag);
    auto uniform = [&](int g) {
        const auto sets = search_shortest_sets(n, g, 1, 1 << 12);
        v.g = g;
        const auto deps = uniform_dependencies(sets.front(), tag);
        v.layout = DependencyLayout::from_bits(deps);
        if (n * tag == sec) v.config = SchemeConfig::spmac(deps, sec);
    };
    if (scheme == "truncated") {
        v.layout = DependencyLayout::truncated(tag);
        v.config = SchemeConfig::truncated(tag, sec);
    } else if (scheme == "window" || scheme == "whips") {
        v.layout = DependencyLayout::window(n, tag);
        v.config = SchemeConfig::whips(tag, sec);
    } else if (scheme == "cumac") {
        v.config = SchemeConfig::cumac(tag, sec);
        v.layout = v.config->layout();
    } else if (scheme == "minimac") {
        v.config = SchemeConfig::minimac(tag, n, sec);
        v.layout = v.config->layout();
    } else if (scheme == "golomb") {
        uniform(1);
    } else if (scheme == "sidon") {
        uniform(default_g(spec, tag, 0));
    } else if (scheme == "r2d2") {
        v.imm = imm;
        v.g = default_g(spec, tag, imm);
        const auto profile =
            build_profile(tag, sec, v.g, imm, spec.pool_size, derive_profile_seed(spec.effective_seed()));
        v.layout = DependencyLayout::from_bits(profile.bit_deps);
        v.config = SchemeConfig::spmac(profile);
    } else {
        throw ConfigError("unknown scheme '" + scheme + "'");
    }
    return v;
}

std::vector<Variant> variants(const ExperimentSpec& spec) {
    std::vector<Variant> out;
    for (const auto& scheme : spec.schemes) {
        for (const auto& [tag, imm] : tag_imm_pairs(spec)) out.push_back(resolve(spec, scheme, tag, imm));
    }
    return out;
}

const std::vector<std::string> kAnalysisHeader = {"scheme", "tag_bits", "g", "immediate_bits", "x", "y_min", "y_max"};

std::vector<std::string> analysis_row(const Variant& v, int x, int lo, int hi) {
    return {v.scheme, std::to_string(v.tag), std::to_string(v.g), std::to_string(v.imm),
            std::to_string(x), std::to_string(lo), std::to_string(hi)};
}

struct Channel {
    std::string name;
    GilbertElliot model;
};

std::vector<Channel> channels(const ExperimentSpec& spec) {
    std::vector<Channel> out;
    for (const auto& name : spec.presets) out.push_back({name, GilbertElliot::preset(name)});
    if (spec.p) out.push_back({"custom", {*spec.p, *spec.r, *spec.eg, *spec.eb}});
    return out;
}

TrialPlan plan_of(const ExperimentSpec& spec) {
    TrialPlan plan;
    plan.runs = spec.runs;
    plan.events = spec.events;
    plan.seed = spec.effective_seed();
    return plan;
}

ExperimentResult scenario_delay(const ExperimentSpec& spec) {
    const auto vs = variants(spec);
    int horizon = spec.horizon;
    if (horizon == 0) {
        for (const auto& v : vs) horizon = std::max(horizon, full_security_delay(v.layout, spec.security_bits));
    }
    ExperimentResult res;
    res.table.header = kAnalysisHeader;
    for (const auto& v : vs) {
        if (v.scheme == "r2d2") {
            const auto band = delay_band(v.tag, spec.security_bits, v.g, v.imm, spec.pool_size, horizon);
            for (int k = 0; k <= horizon; ++k) {
                res.table.rows.push_back(analysis_row(v, k, band.lo[static_cast<std::size_t>(k)],
                                                      band.hi[static_cast<std::size_t>(k)]));
            }
        } else {
            const auto curve = delay_curve(v.layout, horizon, spec.security_bits);
            for (int k = 0; k <= horizon; ++k) {
                const int y = curve[static_cast<std::size_t>(k)];
                res.table.rows.push_back(analysis_row(v, k, y, y));
            }
        }
    }
    res.summary = "delay: " + std::to_string(vs.size()) + " configurations over " + std::to_string(horizon + 1) +
                  " packets";
    return res;
}

ExperimentResult scenario_resilience(const ExperimentSpec& spec) {
    const auto vs = variants(spec);
    ExperimentResult res;
    res.table.header = kAnalysisHeader;
    int last = -1;
    for (const auto& v : vs) {
        for (int k = 0; k <= spec.drops; ++k) {
            ResilienceQuery query{v.layout, k, spec.security_bits, 0, SearchMode::Auto};
            const int y = worst_case_resilience(query).security;
            res.table.rows.push_back(analysis_row(v, k, y, y));
            last = y;
        }
    }
    res.summary = "resilience: " + std::to_string(vs.size()) + " configurations, drops 0.." +
                  std::to_string(spec.drops) + ", last security " + std::to_string(last);
    return res;
}

ExperimentResult scenario_memory(const ExperimentSpec& spec) {
    ExperimentResult res;
    res.table.header = kAnalysisHeader;
    int skipped = 0;
    for (const auto& name : spec.schemes) {
        for (const auto& [tag, imm] : tag_imm_pairs(spec)) {
            const auto kind = name == "spmac" ? SchemeKind::SpMac : parse_scheme_kind(name);
            Variant v{name, tag, 0, 0, {}, std::nullopt};
            MemoryRange range;
            try {
                if (kind == SchemeKind::MiniMac) {
                    range = {memory_model(kind, tag, spec.security_bits, spec.msg_len[0]).min_bytes,
                             memory_model(kind, tag, spec.security_bits, spec.msg_len[1]).max_bytes};
                } else if (kind == SchemeKind::SpMac) {
                    v.g = default_g(spec, tag, imm);
                    v.imm = imm;
                    range = memory_model(kind, tag, spec.security_bits, 0, {v.g, imm, spec.pool_size});
                } else {
                    range = memory_model(kind, tag, spec.security_bits, 0);
                }
            } catch (const ConfigError&) {
                ++skipped;  // e.g. CuMAC with a tag size not dividing the security level
                continue;
            }
            res.table.rows.push_back(analysis_row(v, tag, range.min_bytes, range.max_bytes));
        }
    }
    res.summary = "memory: " + std::to_string(res.table.rows.size()) + " rows, " + std::to_string(skipped) +
                  " indivisible configurations skipped";
    return res;
}

ExperimentResult scenario_jam(const ExperimentSpec& spec) {
    const auto vs = variants(spec);
    ExperimentResult res;
    res.table.header = {"scheme", "tag_bits", "q", "success", "ci"};
    for (const auto& v : vs) {
        for (double q : spec.q) {
            const auto est = run_jammer_experiment(v.layout, q, plan_of(spec));
            res.table.rows.push_back({v.scheme, std::to_string(v.tag), format_double(q), format_double(est.mean),
                                      format_double(est.ci)});
        }
    }
    res.summary = "jam: " + std::to_string(res.table.rows.size()) + " rows";
    return res;
}

ExperimentResult scenario_channel(const ExperimentSpec& spec) {
    const auto vs = variants(spec);
    const auto chans = channels(spec);
    ExperimentResult res;
    res.table.header = {"scheme", "tag_bits", "channel", "mean_unverifiable", "ci"};
    std::string detail;
    for (const auto& v : vs) {
        if (!v.config) throw ConfigError(v.scheme + " needs tag-bits dividing security-bits here");
        for (const auto& ch : chans) {
            const auto r = run_channel_experiment(*v.config, ch.model, plan_of(spec));
            res.table.rows.push_back({v.scheme, std::to_string(v.tag), ch.name,
                                      format_double(r.unverifiable.mean), format_double(r.unverifiable.ci)});
            detail = v.scheme + "/" + std::to_string(v.tag) + "/" + ch.name + " = " +
                     format_double(r.unverifiable.mean);
        }
    }
    res.summary = "channel: " + std::to_string(res.table.rows.size()) + " rows, last " + detail;
    return res;
}

ExperimentResult scenario_predictor(const ExperimentSpec& spec) {
    const auto vs = variants(spec);
    const auto chans = channels(spec);
    ExperimentResult res;
    res.table.header = {"scheme", "tag_bits", "channel", "alpha", "success", "ci"};
    for (const auto& v : vs) {
        for (const auto& ch : chans) {
            for (double a : spec.alpha) {
                const auto est = run_predictor_experiment(v.layout, ch.model, a, plan_of(spec));
                res.table.rows.push_back({v.scheme, std::to_string(v.tag), ch.name, format_double(a),
                                          format_double(est.mean), format_double(est.ci)});
            }
        }
    }
    res.summary = "predictor: " + std::to_string(res.table.rows.size()) + " rows";
    return res;
}

ExperimentResult scenario_dos(const ExperimentSpec& spec) {
    const auto setup = default_dos_setup(spec.effective_seed());
    ExperimentResult res;
    res.table.header = {"scheme", "k_drops", "discarded"};
    std::string detail;
    for (const auto& name : spec.schemes) {
        const auto scheme = parse_dos_scheme(name);
        int last = 0;
        for (int k = 0; k <= spec.drops; ++k) {
            last = run_dos_comparison(scheme, k, setup).discarded;
            res.table.rows.push_back({name, std::to_string(k), std::to_string(last)});
        }
        detail += (detail.empty() ? "" : ", ") + name + "=" + std::to_string(last);
    }
    res.summary = "dos at k=" + std::to_string(spec.drops) + ": " + detail;
    return res;
}

ExperimentResult scenario_deps(const ExperimentSpec& spec) {
    const int g = spec.g.value_or(1);
    const auto sets = search_shortest_sets(spec.order, g, static_cast<std::size_t>(spec.count), spec.max_length);
    ExperimentResult res;
    res.table.header = {"order", "g", "rank", "length", "marks"};
    for (std::size_t i = 0; i < sets.size(); ++i) {
        std::string marks;
        for (int m : sets[i]) marks += (marks.empty() ? "" : " ") + std::to_string(m);
        res.table.rows.push_back({std::to_string(spec.order), std::to_string(g), std::to_string(i),
                                  std::to_string(sets[i].length()), marks});
    }
    res.summary = "order " + std::to_string(spec.order) + ", g " + std::to_string(g) + ": " +
                  sets.front().to_string() + " (length " + std::to_string(sets.front().length()) + ")";
    return res;
}

}  // namespace

ExperimentResult run_experiment(ExperimentSpec spec) {
    spec.complete();
    spec.validate();
    const auto& s = spec.scenario;
    if (s == "delay") return scenario_delay(spec);
    if (s == "resilience") return scenario_resilience(spec);
    if (s == "memory") return scenario_memory(spec);
    if (s == "jam") return scenario_jam(spec);
    if (s == "channel") return scenario_channel(spec);
    if (s == "predictor") return scenario_predictor(spec);
    if (s == "dos") return scenario_dos(spec);
    return scenario_deps(spec);
}

const std::vector<ManifestEntry>& figure_manifest() {
    static const std::vector<ManifestEntry> entries = {
        {"fig4a", "delay of sliding windows and Golomb rulers",
         {"--scenario", "delay", "--scheme", "window,golomb", "--tag-bits", "8,16,32"}},
        {"fig4b", "worst-case security of sliding windows and Golomb rulers",
         {"--scenario", "resilience", "--scheme", "window,golomb", "--tag-bits", "8,16,32", "--drops", "8"}},
        {"fig5a", "delay of g-Sidon dependencies at 32-bit maximum loss",
         {"--scenario", "delay", "--scheme", "golomb,sidon", "--tag-bits", "8,16,32"}},
        {"fig5b", "worst-case security of g-Sidon dependencies",
         {"--scenario", "resilience", "--scheme", "golomb,sidon", "--tag-bits", "8,16,32", "--drops", "8"}},
        {"fig6a", "delay band of randomized bit dependencies",
         {"--scenario", "delay", "--scheme", "r2d2", "--tag-bits", "8,16,32,32", "--immediate-bits", "0,0,0,16"}},
        {"fig6b", "worst-case security of randomized bit dependencies",
         {"--scenario", "resilience", "--scheme", "r2d2", "--tag-bits", "8,16,32,32", "--immediate-bits",
          "0,0,0,16", "--drops", "8"}},
        {"fig8", "selective jamming success against sliding windows",
         {"--scenario", "jam", "--scheme", "window", "--tag-bits", "8,16,32"}},
        {"fig9", "channel-predicting injection against sliding windows",
         {"--scenario", "predictor", "--scheme", "window", "--tag-bits", "8,16,32", "--preset",
          "low-error,high-error"}},
        {"fig10", "per-stream memory by tag size",
         {"--scenario", "memory", "--scheme", "whips,minimac,cumac,spmac"}},
        {"fig11", "discarded messages under adversarial drops",
         {"--scenario", "dos", "--drops", "10"}},
        {"fig12a", "delay band at 16-bit maximum loss",
         {"--scenario", "delay", "--scheme", "r2d2", "--tag-bits", "16,16,32", "--immediate-bits", "0,8,16",
          "--max-loss", "16"}},
        {"fig12b", "worst-case security at 16-bit maximum loss",
         {"--scenario", "resilience", "--scheme", "r2d2", "--tag-bits", "16,16,32", "--immediate-bits", "0,8,16",
          "--max-loss", "16", "--drops", "8"}},
    };
    return entries;
}

}  // namespace promac
