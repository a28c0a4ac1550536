#ifndef SPECBOUND_RNG_HPP
#define SPECBOUND_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace specbound::rng {

// Explicit transforms on top of mt19937_64 so that draws are reproducible
// across standard libraries (std distributions are implementation-defined).

// Uniform in [0, 1).
inline double uniform01(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Uniform in (0, 1].
inline double uniform01_open_low(std::mt19937_64& g) {
    return (static_cast<double>(g() >> 11) + 1.0) * 0x1.0p-53;
}

// Standard normal via Box-Muller.
inline double normal(std::mt19937_64& g) {
    double u1 = uniform01_open_low(g);
    double u2 = uniform01(g);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// Uniform integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t below(std::mt19937_64& g, std::uint64_t bound) {
    std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
        std::uint64_t r = g();
        if (r >= threshold) return r % bound;
    }
}

}  // namespace specbound::rng

#endif
