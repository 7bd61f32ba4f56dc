#pragma once

#include <cstdint>
#include <vector>

namespace matsketch::rng {

// Stream tags. Each randomized operator draws from its own stream so that
// changing one operator never shifts the numbers seen by another.
enum class Stream : std::uint64_t {
    gaussian = 1,
    sign = 2,
    srht_signs = 3,
    srht_rows = 4,
    additive = 5,
    adaptive = 6,
    subspace = 7,
    kmeanspp = 8,
    trial = 9,
    synthetic = 10,
    uniform_rows = 11,
    restart = 12,
};

std::uint64_t splitmix64(std::uint64_t x);

// Seed for sub-task `index` of a parent seed (boosting trials, restarts, ...).
std::uint64_t derive_seed(std::uint64_t base, Stream tag, std::uint64_t index);

// Counter-based generator: value i of a stream is a pure function of
// (seed, stream, i), so matrices can be filled in any order.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, Stream stream);
    CounterRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t bits(std::uint64_t counter) const;
    // Uniform on [0, 1).
    double uniform(std::uint64_t counter) const;
    // Standard normal via Box-Muller on counters 2c and 2c+1.
    double normal(std::uint64_t counter) const;
    // Equiprobable +1 / -1.
    double sign(std::uint64_t counter) const { return (bits(counter) >> 63) ? 1.0 : -1.0; }

    // Sequential interface over the same counters.
    std::uint64_t next_bits() { return bits(pos_++); }
    double next_uniform() { return uniform(pos_++); }
    double next_normal() { return normal(pos_++); }
    // Uniform integer in [0, n) by rejection, n > 0.
    std::uint64_t next_below(std::uint64_t n);

    std::uint64_t position() const { return pos_; }

private:
    std::uint64_t key_;
    std::uint64_t pos_ = 0;
};

// Draws `count` indices i.i.d. from the (unnormalized, nonnegative) weights.
// Indices with zero weight are never returned.
std::vector<int> sample_categorical(const std::vector<double>& weights, int count, CounterRng& rng);

}  // namespace matsketch::rng
