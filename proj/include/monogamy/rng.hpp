#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace monogamy {

// SplitMix64-style finalizer used to derive independent stream seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// One PRNG stream per logical unit of work (sample or shard); results are then
// independent of how work is distributed across threads.
inline std::mt19937_64 derive_stream(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(mix_seed(seed, index));
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Standard normal via Box-Muller; one uniform pair per draw keeps the stream
// layout independent of call history.
inline double gaussian(std::mt19937_64& rng) {
    double u1 = 1.0 - uniform_unit(rng);  // (0, 1], keeps log finite
    double u2 = uniform_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace monogamy
