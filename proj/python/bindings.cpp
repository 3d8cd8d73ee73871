#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "promac/analysis.hpp"
#include "promac/depsets.hpp"
#include "promac/errors.hpp"
#include "promac/experiment.hpp"
#include "promac/schemes.hpp"
#include "promac/simkit.hpp"

namespace py = pybind11;
using namespace promac;

namespace {

std::vector<int> to_list(const MarkSet& s) { return {s.begin(), s.end()}; }

BitDependencies to_deps(const std::vector<std::vector<int>>& lists) {
    BitDependencies deps;
    for (const auto& l : lists) deps.emplace_back(l);
    return deps;
}

DependencyLayout layout_for(const std::string& scheme, int tag_bits, int security_bits,
                            const std::vector<std::vector<int>>& deps) {
    if (scheme == "window") return DependencyLayout::window(window_size(security_bits, tag_bits), tag_bits);
    if (scheme == "truncated") return DependencyLayout::truncated(tag_bits);
    if (scheme == "profile") return DependencyLayout::from_bits(to_deps(deps));
    throw ConfigError("layout must be window, truncated or profile");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Progressive MAC laboratory";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<InfeasibleError>(m, "InfeasibleError", base.ptr());
    py::register_exception<ProtocolError>(m, "ProtocolError", base.ptr());

    m.def("is_g_sidon", [](const std::vector<int>& marks, int g) { return is_g_sidon(marks, g); },
          py::arg("marks"), py::arg("g"));
    m.def(
        "search_shortest_sets",
        [](int order, int g, std::size_t count, int length_bound) {
            std::vector<std::vector<int>> out;
            for (const auto& s : search_shortest_sets(order, g, count, length_bound)) out.push_back(to_list(s));
            return out;
        },
        py::arg("order"), py::arg("g"), py::arg("count") = 1, py::arg("length_bound") = 1 << 12,
        py::call_guard<py::gil_scoped_release>());
    m.def("known_optimal_ruler", [](int order) { return to_list(known_optimal_ruler(order).set); });
    m.def("profile_orders", &profile_orders, py::arg("tag_bits"), py::arg("security_bits"),
          py::arg("immediate_bits"));
    m.def(
        "build_profile",
        [](int tag_bits, int security_bits, int g, int immediate_bits, int pool_size, const std::string& seed_hex) {
            std::vector<std::vector<int>> out;
            const auto p = build_profile(tag_bits, security_bits, g, immediate_bits, pool_size, seed_from_hex(seed_hex));
            for (const auto& d : p.bit_deps) out.push_back(to_list(d));
            return out;
        },
        py::arg("tag_bits"), py::arg("security_bits") = 128, py::arg("g") = 1, py::arg("immediate_bits") = 0,
        py::arg("pool_size") = 64, py::arg("seed_hex") = std::string(32, '0'),
        py::call_guard<py::gil_scoped_release>());
    m.def("profile_max_delay", [](const std::vector<std::vector<int>>& deps) { return profile_max_delay(to_deps(deps)); });

    m.def(
        "delay_curve",
        [](const std::string& scheme, int tag_bits, int horizon, int security_bits,
           const std::vector<std::vector<int>>& deps) {
            return delay_curve(layout_for(scheme, tag_bits, security_bits, deps), horizon, security_bits);
        },
        py::arg("scheme"), py::arg("tag_bits"), py::arg("horizon"), py::arg("security_bits") = 128,
        py::arg("deps") = std::vector<std::vector<int>>{});
    m.def(
        "worst_case_resilience",
        [](const std::string& scheme, int tag_bits, int drops, int security_bits,
           const std::vector<std::vector<int>>& deps) {
            const auto r = worst_case_resilience(
                {layout_for(scheme, tag_bits, security_bits, deps), drops, security_bits, 0, SearchMode::Auto});
            return py::make_tuple(r.security, r.dropped, r.exact);
        },
        py::arg("scheme"), py::arg("tag_bits"), py::arg("drops"), py::arg("security_bits") = 128,
        py::arg("deps") = std::vector<std::vector<int>>{});
    m.def(
        "jam_success_probability",
        [](const std::string& scheme, int tag_bits, double q, int security_bits,
           const std::vector<std::vector<int>>& deps) {
            return jam_success_probability(layout_for(scheme, tag_bits, security_bits, deps), q);
        },
        py::arg("scheme"), py::arg("tag_bits"), py::arg("q"), py::arg("security_bits") = 128,
        py::arg("deps") = std::vector<std::vector<int>>{});
    m.def(
        "memory_bytes",
        [](const std::string& scheme, int tag_bits, int security_bits, int msg_len) {
            const auto r = memory_model(parse_scheme_kind(scheme), tag_bits, security_bits, msg_len);
            return py::make_tuple(r.min_bytes, r.max_bytes);
        },
        py::arg("scheme"), py::arg("tag_bits"), py::arg("security_bits") = 128, py::arg("msg_len") = 0);
    m.def("ge_stationary_per", [](double p, double r, double eg, double eb) {
        return ge_stationary_per({p, r, eg, eb});
    });

    m.def(
        "sign_stream",
        [](const std::string& scheme, int tag_bits, const std::string& key_hex, const std::vector<py::bytes>& payloads,
           int security_bits) {
            auto config = scheme == "whips"       ? SchemeConfig::whips(tag_bits, security_bits)
                          : scheme == "cumac"     ? SchemeConfig::cumac(tag_bits, security_bits)
                          : scheme == "truncated" ? SchemeConfig::truncated(tag_bits, security_bits)
                          : scheme == "minimac"
                              ? SchemeConfig::minimac(tag_bits, window_size(security_bits, tag_bits), security_bits)
                              : throw ConfigError("sign_stream supports whips, cumac, minimac and truncated");
            auto signer = make_signer(config, Key::from_hex(key_hex));
            std::vector<std::string> tags;
            for (const auto& p : payloads) {
                const auto s = static_cast<std::string>(p);
                tags.push_back(signer->sign(Bytes(s.begin(), s.end())).tag.to_hex());
            }
            return tags;
        },
        py::arg("scheme"), py::arg("tag_bits"), py::arg("key_hex"), py::arg("payloads"), py::arg("security_bits") = 128);

    m.def(
        "run_experiment",
        [](const std::map<std::string, std::string>& settings) {
            ExperimentSpec spec;
            for (const auto& [k, v] : settings) apply_setting(spec, k, v);
            const auto r = run_experiment(spec);
            return std::make_pair(r.table.render(), r.summary);
        },
        py::arg("settings"), py::call_guard<py::gil_scoped_release>());
    m.def("figure_manifest", [] {
        std::vector<py::tuple> out;
        for (const auto& e : figure_manifest()) out.push_back(py::make_tuple(e.id, e.title, e.args));
        return out;
    });
}
