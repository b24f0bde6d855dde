#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace qneuron {

// Seeded random source used wherever randomness is needed. Built on
// std::mt19937_64, whose output sequence is fixed by the standard, so the
// same seed gives the same stream on every platform. Uniform doubles take
// the top 53 bits of one engine output; normal variates use one Box-Muller
// evaluation per call (two engine outputs, cosine branch).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Standard normal.
    double normal() {
        const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

} // namespace qneuron
