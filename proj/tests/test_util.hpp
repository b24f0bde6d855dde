#pragma once

#include "qneuron/framework.hpp"
#include "qneuron/rng.hpp"
#include "qneuron/statevector.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace qneuron::test {

inline constexpr double kHalfPi = std::numbers::pi / 2.0;

// Haar-ish random state: i.i.d. complex Gaussian amplitudes, normalized.
inline StateVector random_state(int num_qubits, Rng& rng) {
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    double norm2 = 0.0;
    for (Complex& a : amps) {
        a = Complex{rng.normal(), rng.normal()};
        norm2 += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& a : amps) a *= inv;
    return StateVector::from_amplitudes(std::move(amps));
}

// Uniform components in [lo, hi).
inline ClassicalVector random_vector(std::size_t m, Rng& rng, double lo = 0.0,
                                     double hi = kHalfPi) {
    ClassicalVector v(m);
    for (double& c : v) c = lo + (hi - lo) * rng.uniform();
    return v;
}

inline ClassicalVector random_binary_vector(std::size_t m, Rng& rng) {
    ClassicalVector v(m);
    for (double& c : v) c = rng.uniform() < 0.5 ? -1.0 : 1.0;
    return v;
}

} // namespace qneuron::test
