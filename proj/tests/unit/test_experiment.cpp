#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "promac/errors.hpp"
#include "promac/experiment.hpp"

using namespace promac;

namespace {

ExperimentSpec from_flags(const std::vector<std::pair<std::string, std::string>>& flags) {
    ExperimentSpec spec;
    for (const auto& [k, v] : flags) apply_setting(spec, k, v);
    return spec;
}

std::string config_text(const std::vector<std::pair<std::string, std::string>>& flags) {
    std::string text = "# generated\n\n";
    for (const auto& [k, v] : flags) text += k + " = " + v + "   # note\n";
    return text;
}

}  // namespace

TEST_CASE("config files and flags produce the same output") {
    const std::vector<std::pair<std::string, std::string>> flags{
        {"scenario", "jam"}, {"scheme", "window"}, {"tag-bits", "8,32"}, {"q", "0.5,0.9"},
        {"runs", "3"},       {"events", "50"},     {"seed", "9"}};
    ExperimentSpec from_file;
    apply_config_text(from_file, config_text(flags));
    const auto a = run_experiment(from_flags(flags)).table.render();
    const auto b = run_experiment(from_file).table.render();
    CHECK(a == b);
    CHECK(a.rfind("scheme,tag_bits,q,success,ci\n", 0) == 0);

    ExperimentSpec overridden;
    apply_config_text(overridden, config_text(flags));
    apply_setting(overridden, "seed", "10");
    CHECK(run_experiment(overridden).table.render() != a);
}

TEST_CASE("runs are reproducible per seed") {
    const auto spec = from_flags({{"scenario", "channel"}, {"scheme", "window,r2d2"}, {"tag-bits", "16"},
                                  {"preset", "high-error"}, {"runs", "3"}, {"events", "100"}});
    CHECK(run_experiment(spec).table.render() == run_experiment(spec).table.render());
}

TEST_CASE("invalid settings name the problem") {
    ExperimentSpec spec;
    CHECK_THROWS_AS(apply_setting(spec, "colour", "red"), ConfigError);
    CHECK_THROWS_AS(apply_setting(spec, "runs", "ten"), ConfigError);
    CHECK_THROWS_AS(apply_setting(spec, "tag-bits", "8,,16"), ConfigError);
    CHECK_THROWS_AS(apply_config_text(spec, "runs 10\n"), ConfigError);

    auto bad = [](std::vector<std::pair<std::string, std::string>> flags) {
        return from_flags(flags);
    };
    CHECK_THROWS_AS(run_experiment(bad({{"scenario", "nope"}})), ConfigError);
    CHECK_THROWS_AS(run_experiment(bad({{"scenario", "jam"}, {"q", "1.5"}})), ConfigError);
    CHECK_THROWS_AS(run_experiment(bad({{"scenario", "channel"}, {"p", "0.1"}})), ConfigError);
    CHECK_THROWS_AS(run_experiment(bad({{"scenario", "delay"}, {"tag-bits", "8"}, {"immediate-bits", "8"}})),
                    ConfigError);
    CHECK_THROWS_AS(run_experiment(bad({{"scenario", "dos"}, {"scheme", "whips"}})), ConfigError);
    CHECK_THROWS_AS(run_experiment(bad({{"scenario", "deps"}, {"order", "8"}, {"max-length", "30"}})),
                    InfeasibleError);
}

TEST_CASE("scenario schemas") {
    const auto deps = run_experiment(from_flags({{"scenario", "deps"}, {"order", "4"}, {"g", "1"}}));
    CHECK(deps.table.render() == "order,g,rank,length,marks\n4,1,0,6,0 1 4 6\n");

    const auto res = run_experiment(from_flags(
        {{"scenario", "resilience"}, {"scheme", "window"}, {"tag-bits", "16"}, {"drops", "2"}}));
    CHECK(res.table.header == std::vector<std::string>{"scheme", "tag_bits", "g", "immediate_bits", "x", "y_min", "y_max"});
    CHECK(res.table.rows.back() == std::vector<std::string>{"window", "16", "0", "0", "2", "0", "0"});

    const auto mem = run_experiment(from_flags({{"scenario", "memory"}, {"scheme", "whips,minimac"},
                                                {"tag-bits", "10,32"}}));
    CHECK(mem.table.rows[0] == std::vector<std::string>{"whips", "10", "0", "0", "10", "416", "416"});
    CHECK(mem.table.rows[3] == std::vector<std::string>{"minimac", "32", "0", "0", "32", "40", "200"});

    const auto dos = run_experiment(from_flags({{"scenario", "dos"}, {"scheme", "traditional"}, {"drops", "2"}}));
    CHECK(dos.table.render() == "scheme,k_drops,discarded\ntraditional,0,0\ntraditional,1,0\ntraditional,2,0\n");

    const auto pred = run_experiment(from_flags({{"scenario", "predictor"}, {"tag-bits", "32"}, {"alpha", "0.5"},
                                                 {"runs", "2"}, {"events", "20"}}));
    CHECK(pred.table.header.size() == 6);
    CHECK(pred.table.rows.size() == 2);
}

TEST_CASE("manifest") {
    const auto& m = figure_manifest();
    CHECK(m.size() >= 8);
    CHECK(&m == &figure_manifest());
    for (const auto& id : {"fig4a", "fig4b", "fig5a", "fig5b", "fig6a", "fig6b", "fig8", "fig9", "fig10", "fig11",
                           "fig12a", "fig12b"}) {
        CHECK(std::any_of(m.begin(), m.end(), [&](const auto& e) { return e.id == id; }));
    }
    for (const auto& e : m) {
        ExperimentSpec spec;
        for (std::size_t i = 0; i + 1 < e.args.size(); i += 2) apply_setting(spec, e.args[i].substr(2), e.args[i + 1]);
        spec.complete();
        CHECK_NOTHROW(spec.validate());
    }
}

TEST_CASE("atomic writes and number formatting") {
    const auto dir = std::filesystem::temp_directory_path() / "promac-unit";
    std::filesystem::create_directories(dir);
    const auto path = dir / "out.csv";
    write_file_atomic(path, "a,b\n1,2\n");
    write_file_atomic(path, "a,b\n3,4\n");
    std::ifstream in(path);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == "a,b\n3,4\n");
    CHECK_FALSE(std::filesystem::exists(dir / "out.csv.tmp"));
    CHECK(format_double(0.5) == "0.500000");
    CHECK(format_double(1.0 / 3.0) == "0.333333");
}
