#pragma once

// Named scenarios behind the command-line runner: parameter handling, CSV
// tables and the list of figure presets.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace promac {

/// One run of the command-line tool. List-valued fields come from
/// comma-separated values.
struct ExperimentSpec {
    std::string scenario;
    std::vector<std::string> schemes;
    std::vector<int> tag_bits;
    std::optional<int> g;                 ///< default: max_loss / progressive bits
    std::vector<int> immediate_bits{0};   ///< one value, or one per tag size
    int pool_size = 64;
    int security_bits = 128;
    int max_loss = 32;
    std::vector<std::string> presets;
    std::optional<double> p, r, eg, eb;   ///< custom channel, all four together
    std::vector<double> q;
    std::vector<double> alpha;
    int drops = 4;
    int runs = 30;
    int events = 1000;
    std::optional<std::uint64_t> seed;    ///< falls back to PROMAC_SEED, then 1
    std::string out;
    int order = 4;                        ///< deps
    int count = 1;                        ///< deps
    int max_length = 4096;                ///< deps: longest set searched
    int horizon = 0;                      ///< delay; 0 = up to full security
    std::vector<int> msg_len{10, 50};     ///< memory: Mini-MAC message sizes

    /// Fills scenario-specific defaults for unset lists.
    void complete();
    /// Throws ConfigError naming the first invalid field.
    void validate() const;
    std::uint64_t effective_seed() const;
};

/// Sets one field from its flag name without dashes ("tag-bits", "seed").
/// Throws ConfigError for unknown keys or unparsable values.
void apply_setting(ExperimentSpec& spec, std::string_view key, std::string_view value);

/// Flat "key = value" lines; '#' starts a comment.
void apply_config_text(ExperimentSpec& spec, std::string_view text);

/// Every settable key, in flag order.
const std::vector<std::string>& setting_keys();

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Header row then data rows, comma-separated, LF line ends.
    std::string render() const;
};

struct ExperimentResult {
    CsvTable table;
    std::string summary;  ///< one line
};

/// Runs a completed, validated spec.
ExperimentResult run_experiment(ExperimentSpec spec);

/// Writes via a temporary file in the same directory and a rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string format_double(double v);

struct ManifestEntry {
    std::string id;           ///< "fig4a"
    std::string title;
    std::vector<std::string> args;  ///< flags for the runner
};

const std::vector<ManifestEntry>& figure_manifest();

}  // namespace promac
