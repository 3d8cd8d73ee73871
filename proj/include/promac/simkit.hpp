#pragma once

// Lossy-channel and attacker simulations.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "promac/layout.hpp"
#include "promac/schemes.hpp"
#include "promac/stats.hpp"

namespace promac {

/// Two-state Markov loss model: p good->bad, r bad->good, per-state loss
/// probabilities err_good / err_bad.
struct GilbertElliot {
    double p = 0.0;
    double r = 1.0;
    double err_good = 0.0;
    double err_bad = 0.0;

    static GilbertElliot low_error() { return {0.005, 0.759, 0.011, 0.624}; }
    static GilbertElliot high_error() { return {0.032, 0.83, 0.068, 0.788}; }
    /// "low-error", "high-error" or "lossless".
    static GilbertElliot preset(std::string_view name);

    void validate() const;
    /// Stationary probability of the bad state; needs p + r > 0.
    double pi_bad() const;
};

double ge_stationary_per(const GilbertElliot& model);

/// Loss mask (1 = lost) of a chain started in the good state.
std::vector<std::uint8_t> ge_loss_sequence(const GilbertElliot& model, std::size_t length, Rng& rng);

struct TrialPlan {
    int runs = 30;
    int events = 1000;
    double confidence = 0.99;
    std::uint64_t seed = 1;

    void validate() const;
};

struct Estimate {
    double mean = 0.0;
    double ci = 0.0;
    std::vector<double> per_run;
};

struct ChannelResult {
    Estimate unverifiable;        ///< fraction of received messages ending with 0 bits
    std::uint64_t received = 0;
    std::uint64_t zero_accrued = 0;
    int min_accrued = 0;          ///< over received messages
};

/// Signs `plan.events` counted messages per run (after a warm-up of
/// max_delay messages and followed by max_delay more so every counted
/// message completes), drops packets per the channel and verifies the rest
/// with a ReceiverLedger.
ChannelResult run_channel_experiment(const SchemeConfig& scheme, const GilbertElliot& model, const TrialPlan& plan);

/// Each event: every packet able to weaken a fixed target is jammed, each
/// attempt succeeding with probability q; success when the target keeps no
/// verified bit.
Estimate run_jammer_experiment(const DependencyLayout& layout, double q, const TrialPlan& plan);

/// Each event: the attacker calls a bad channel state and is right with
/// probability alpha, lets one more packet pass and injects a forgery. It
/// succeeds when genuine losses leave the forgery with no verifiable bit.
/// Channel states before the call are drawn backwards with the same chain,
/// which is reversible.
Estimate run_predictor_experiment(const DependencyLayout& layout, const GilbertElliot& model, double alpha,
                                  const TrialPlan& plan);

enum class DosScheme { Traditional, Aggregated, ShiftedXor, Window, SpMac };

std::string_view dos_scheme_name(DosScheme scheme);
DosScheme parse_dos_scheme(std::string_view name);

struct DosSetup {
    int batch = 8;                ///< aggregated / shifted-XOR batch size
    int threshold = 32;           ///< messages below this many bits are discarded
    int security_bits = 128;
    int stream = 64;              ///< attackable packets
    DependencyLayout window;      ///< window ProMAC layout
    DependencyLayout spmac;       ///< SP-MAC layout
};

/// Defaults: 2-byte tags, window of 8, SP-MAC profile with at most 16 bits
/// lost per drop (g = 1, pool 64) built from `seed`.
DosSetup default_dos_setup(std::uint64_t seed);

struct DosResult {
    int discarded = 0;
    std::vector<int> dropped;
    bool exact = false;
};

/// Received messages pushed below the threshold by `drops` adversarial
/// drops inside the attackable stream; history before and after it is
/// received. Exact for drops <= 4, greedy beyond.
DosResult run_dos_comparison(DosScheme scheme, int drops, const DosSetup& setup);

/// Discards caused by one given drop set.
int dos_discards(DosScheme scheme, const std::vector<int>& dropped, const DosSetup& setup);

ProfileSeed derive_profile_seed(std::uint64_t seed);
Key derive_key(std::uint64_t seed);

}  // namespace promac
