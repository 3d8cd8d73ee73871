#pragma once

// Seeded random streams and confidence intervals for Monte-Carlo runs.

#include <cstdint>
#include <random>
#include <span>

namespace promac {

std::uint64_t splitmix64(std::uint64_t x);

/// mt19937_64 seeded with splitmix64(seed + golden * (run + 1)), one stream
/// per run index. Doubles take the top 53 bits, so values are identical on
/// every platform.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t run);

    std::uint64_t next() { return engine_(); }
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

double mean(std::span<const double> samples);

/// Half-width of the Student-t confidence interval of the mean. Needs at
/// least two samples; confidence in (0, 1).
double ci_halfwidth(std::span<const double> samples, double confidence);

}  // namespace promac
