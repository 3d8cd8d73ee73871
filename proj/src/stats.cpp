#include <algorithm>
#include "promac/stats.hpp"

#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <numeric>

#include "promac/errors.hpp"

namespace promac {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t run)
    : engine_(splitmix64(seed + 0x9E3779B97F4A7C15ULL * (run + 1))) {}

double mean(std::span<const double> samples) {
    if (samples.empty()) throw ConfigError("mean of no samples");
    return std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
}

double ci_halfwidth(std::span<const double> samples, double confidence) {
    if (samples.size() < 2) throw ConfigError("confidence interval needs at least two samples");
    if (!(confidence > 0.0 && confidence < 1.0)) throw ConfigError("confidence must be in (0, 1)");
    if (std::all_of(samples.begin(), samples.end(), [&](double x) { return x == samples.front(); })) return 0.0;
    const double m = mean(samples);
    double ss = 0.0;
    for (double x : samples) ss += (x - m) * (x - m);
    const auto n = static_cast<double>(samples.size());
    const double sd = std::sqrt(ss / (n - 1.0));
    const boost::math::students_t dist(n - 1.0);
    const double t = boost::math::quantile(boost::math::complement(dist, (1.0 - confidence) / 2.0));
    return t * sd / std::sqrt(n);
}

}  // namespace promac
