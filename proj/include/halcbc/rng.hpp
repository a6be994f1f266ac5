#pragma once

#include <cstdint>

namespace halcbc {

/**
 * Counter-based deterministic generator.
 *
 * Output i of stream `seed` is the SplitMix64 finalizer applied to
 * seed + (i+1) * 0x9E3779B97F4A7C15 (the 64-bit golden ratio constant).
 * Any (seed, counter) pair can be evaluated independently, so parallel
 * consumers draw from disjoint counter ranges without shared state.
 */
struct CounterRng {
    std::uint64_t seed = 0;

    std::uint64_t at(std::uint64_t counter) const {
        std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound) via the multiply-shift map. The modulo
    // bias is below bound * 2^-64, which is far under double rounding for
    // the digit alphabets used here.
    std::uint32_t below(std::uint64_t counter, std::uint32_t bound) const {
        const unsigned __int128 wide =
            static_cast<unsigned __int128>(at(counter)) * static_cast<unsigned __int128>(bound);
        return static_cast<std::uint32_t>(wide >> 64);
    }

    // Uniform double in [0,1) with 53 random bits.
    double uniform01(std::uint64_t counter) const {
        return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
    }
};

} // namespace halcbc
