#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>

namespace tsfill {

/// SplitMix64 finalizer. Bijective on 64-bit integers; used as the hash step
/// for seed derivation.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/**
 * Derive an independent child seed from a base seed and a path of integer
 * components, by chaining the SplitMix64 finalizer:
 *
 *     h = mix64(base); for each c in path: h = mix64(h ^ c)
 *
 * This is the stream-splitting rule used throughout: the grid runner derives
 * the seed for replicate i of cell (phi-index, rate-index) as
 * derive_seed(master_seed, {phi_index, rate_index, i}), and that replicate
 * seed is split once more into the simulation stream (component 0) and the
 * dropout stream (component 1). Same inputs, same seed, on every platform.
 */
constexpr std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path) {
    std::uint64_t h = mix64(base);
    for (std::uint64_t c : path) h = mix64(h ^ c);
    return h;
}

/// Uniform integer in [0, bound) drawn from `engine` by rejection sampling.
/// Unbiased for every bound >= 1 and fully determined by the engine state
/// (std::uniform_int_distribution is not portable across standard libraries).
inline std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound) {
    // Accept draws below the largest multiple of `bound`; cutoff == 0 means
    // bound divides 2^64 and every draw is accepted.
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t cutoff = ~((max % bound + 1) % bound) + 1;
    std::uint64_t v = engine();
    while (cutoff != 0 && v >= cutoff) v = engine();
    return v % bound;
}

/**
 * Stream of standard normal deviates over std::mt19937_64, using the basic
 * Box-Muller transform. The engine's output sequence is pinned by the C++
 * standard and the transform is written out explicitly, so a given seed
 * produces the same deviates everywhere; std::normal_distribution gives no
 * such guarantee.
 */
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1] so the log is finite; u2 in [0, 1).
        const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace tsfill
