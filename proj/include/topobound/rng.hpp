#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace topobound {

// splitmix64. Small, fast, and identical on every platform, which is the
// whole point: std:: distributions are implementation-defined, so any value
// that ends up in a CSV must come from here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Multiply-shift: bias is below 2^-40 for any n that
    // shows up here and the result is reproducible everywhere.
    std::uint64_t next_below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    bool next_bool() { return next_u64() >> 63; }

    // Uniform in [0,1) with 53 bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Two independent standard normals (Box-Muller).
    std::pair<double, double> next_normal_pair() {
        double u1;
        do {
            u1 = next_double();
        } while (u1 == 0.0);
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 6.283185307179586476925286766559 * next_double();
        return {r * std::cos(t), r * std::sin(t)};
    }

    // Seed for one trial of a seeded run. Equivalent to seeding splitmix64
    // with `seed`, skipping `trial + 1` states and finalizing; trials are
    // decorrelated and a run can be reproduced per trial.
    static std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
        std::uint64_t x = seed + 0x9e3779b97f4a7c15ull * (trial + 1);
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        return Rng(trial_seed(seed, trial));
    }

private:
    std::uint64_t state_;
};

} // namespace topobound
