#include "matsketch/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "matsketch/errors.hpp"

namespace matsketch::rng {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, Stream tag, std::uint64_t index) {
    return CounterRng(base, tag).bits(index);
}

CounterRng::CounterRng(std::uint64_t seed, Stream stream)
    : CounterRng(seed, static_cast<std::uint64_t>(stream)) {}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) {
    key_ = splitmix64(splitmix64(seed) ^ (stream * 0xD1B54A32D192ED03ULL));
}

std::uint64_t CounterRng::bits(std::uint64_t counter) const {
    return splitmix64(key_ ^ splitmix64(counter * 0xA0761D6478BD642FULL));
}

double CounterRng::uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
}

double CounterRng::normal(std::uint64_t counter) const {
    const double u1 = 1.0 - uniform(2 * counter);  // (0, 1]
    const double u2 = uniform(2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t CounterRng::next_below(std::uint64_t n) {
    if (n == 0) throw ArgumentError("next_below: n must be positive");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    for (;;) {
        std::uint64_t x = next_bits();
        if (x < limit) return x % n;
    }
}

std::vector<int> sample_categorical(const std::vector<double>& weights, int count, CounterRng& rng) {
    std::vector<double> cdf(weights.size());
    double total = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (!(weights[i] >= 0.0) || !std::isfinite(weights[i]))
            throw ArgumentError("sampling weights must be finite and nonnegative");
        total += weights[i];
        cdf[i] = total;
    }
    if (!(total > 0.0)) throw ArgumentError("sampling weights sum to zero");
    std::vector<int> out;
    out.reserve(count);
    for (int t = 0; t < count; ++t) {
        const double x = rng.next_uniform() * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), x);
        std::size_t idx = static_cast<std::size_t>(it - cdf.begin());
        // x < total except for rounding; fall back to the last positive weight.
        if (idx >= weights.size()) {
            idx = weights.size() - 1;
            while (weights[idx] == 0.0) --idx;
        }
        out.push_back(static_cast<int>(idx));
    }
    return out;
}

}  // namespace matsketch::rng
