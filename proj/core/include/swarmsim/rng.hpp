#pragma once

#include <cstdint>
#include <random>

namespace swarmsim {

/// Deterministic uniform stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; the double conversions below avoid
/// std::uniform_*_distribution, whose results vary between standard library
/// implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + next_double() * (hi - lo); }

    /// Uniform index in [0, n). n must be positive.
    std::size_t index(std::size_t n) {
        const auto i = static_cast<std::size_t>(next_double() * static_cast<double>(n));
        return i < n ? i : n - 1;  // guard against round-up at the top of the range
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace swarmsim
