// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace qss {

/// SplitMix64. Used for every randomized path in the project so results are
/// bit-identical across platforms, which std::uniform_int_distribution does
/// not guarantee.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [1, bound]; bound >= 1. The modulo bias is below
    /// bound / 2^64 and irrelevant at the bounds used here.
    std::uint64_t next_in(std::uint64_t bound) { return next() % bound + 1; }

    /// Uniform in [0, 1).
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

/// One scrambling round of the same generator, for seed derivation.
inline std::uint64_t mix64(std::uint64_t x) {
    return SplitMix64(x).next();
}

} // namespace qss
