#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "promac/errors.hpp"
#include "promac/experiment.hpp"

namespace {

void apply_manifest(promac::ExperimentSpec& spec, const std::string& id) {
    for (const auto& entry : promac::figure_manifest()) {
        if (entry.id != id) continue;
        for (std::size_t i = 0; i + 1 < entry.args.size(); i += 2) {
            promac::apply_setting(spec, entry.args[i].substr(2), entry.args[i + 1]);
        }
        return;
    }
    throw promac::ConfigError("unknown figure id '" + id + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Progressive MAC laboratory: dependency sets, analytics and simulations"};
    app.set_version_flag("--version", "promac 0.1.0");

    std::string positional;
    app.add_option("scenario_name", positional,
                   "delay | resilience | memory | jam | channel | predictor | dos | deps");

    std::map<std::string, std::string> values;
    for (const auto& key : promac::setting_keys()) {
        app.add_option("--" + key, values[key]);
    }
    std::string config_path;
    std::string figure;
    bool list = false;
    app.add_option("--config", config_path, "key = value file; flags take precedence");
    app.add_option("--figure", figure, "start from a figure preset (see --list-figures)");
    app.add_flag("--list-figures", list, "print the figure presets and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (list) {
        for (const auto& entry : promac::figure_manifest()) {
            std::cout << entry.id << "\t" << entry.title << "\t";
            for (std::size_t i = 0; i < entry.args.size(); ++i) std::cout << (i ? " " : "") << entry.args[i];
            std::cout << "\n";
        }
        return 0;
    }

    try {
        promac::ExperimentSpec spec;
        if (!figure.empty()) apply_manifest(spec, figure);
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw promac::ConfigError("cannot read config file " + config_path);
            std::stringstream buf;
            buf << in.rdbuf();
            promac::apply_config_text(spec, buf.str());
        }
        if (!positional.empty()) spec.scenario = positional;
        for (const auto& key : promac::setting_keys()) {
            if (app.count("--" + key) > 0) promac::apply_setting(spec, key, values[key]);
        }
        if (spec.scenario.empty()) throw promac::ConfigError("no scenario given");

        const auto result = promac::run_experiment(spec);
        const std::string out = spec.out.empty() ? "promac-" + spec.scenario + ".csv" : spec.out;
        promac::write_file_atomic(out, result.table.render());
        std::cout << result.summary << " -> " << out << "\n";
        return 0;
    } catch (const promac::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const promac::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
