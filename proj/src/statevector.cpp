#include "qneuron/statevector.hpp"

#include "qneuron/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qneuron {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// Bit position of `qubit` within a basis index, counting from the least
// significant bit. Qubit 0 owns the most significant bit.
int bit_position(int num_qubits, int qubit) { return num_qubits - 1 - qubit; }

void check_qubit_index(int num_qubits, int qubit) {
    if (qubit < 0 || qubit >= num_qubits)
        throw std::invalid_argument("qubit index " + std::to_string(qubit) +
                                    " out of range for " + std::to_string(num_qubits) +
                                    " qubits");
}

void check_distinct(const std::vector<int>& controls, int target) {
    for (std::size_t i = 0; i < controls.size(); ++i) {
        if (controls[i] == target)
            throw std::invalid_argument("gate control equals target");
        for (std::size_t j = i + 1; j < controls.size(); ++j)
            if (controls[i] == controls[j])
                throw std::invalid_argument("duplicate gate control");
    }
}

void check_angle(double lambda) {
    if (!std::isfinite(lambda))
        throw std::invalid_argument("gate angle must be finite");
}

std::size_t control_mask(int num_qubits, const std::vector<int>& controls) {
    std::size_t mask = 0;
    for (int q : controls) mask |= std::size_t{1} << bit_position(num_qubits, q);
    return mask;
}

void apply_in_place(std::vector<Complex>& amps, int num_qubits, const Gate& gate) {
    const std::size_t dim = amps.size();
    switch (gate.kind) {
    case Gate::Kind::Hadamard: {
        const std::size_t stride = std::size_t{1} << bit_position(num_qubits, gate.target);
        for (std::size_t base = 0; base < dim; base += 2 * stride)
            for (std::size_t off = 0; off < stride; ++off) {
                const std::size_t i0 = base + off;
                const std::size_t i1 = i0 + stride;
                const Complex a = amps[i0];
                const Complex b = amps[i1];
                amps[i0] = kInvSqrt2 * (a + b);
                amps[i1] = kInvSqrt2 * (a - b);
            }
        break;
    }
    case Gate::Kind::PauliX: {
        const std::size_t stride = std::size_t{1} << bit_position(num_qubits, gate.target);
        for (std::size_t base = 0; base < dim; base += 2 * stride)
            for (std::size_t off = 0; off < stride; ++off)
                std::swap(amps[base + off], amps[base + off + stride]);
        break;
    }
    case Gate::Kind::Phase: {
        const Complex factor = std::polar(1.0, gate.angle);
        const std::size_t stride = std::size_t{1} << bit_position(num_qubits, gate.target);
        for (std::size_t base = 0; base < dim; base += 2 * stride)
            for (std::size_t off = 0; off < stride; ++off)
                amps[base + off + stride] *= factor;
        break;
    }
    case Gate::Kind::MultiControlledX: {
        const std::size_t cmask = control_mask(num_qubits, gate.controls);
        const std::size_t tmask = std::size_t{1} << bit_position(num_qubits, gate.target);
        for (std::size_t i = 0; i < dim; ++i)
            if ((i & cmask) == cmask && (i & tmask) == 0)
                std::swap(amps[i], amps[i | tmask]);
        break;
    }
    case Gate::Kind::MultiControlledPhase: {
        const Complex factor = std::polar(1.0, gate.angle);
        const std::size_t mask = control_mask(num_qubits, gate.controls) |
                                 (std::size_t{1} << bit_position(num_qubits, gate.target));
        for (std::size_t i = 0; i < dim; ++i)
            if ((i & mask) == mask) amps[i] *= factor;
        break;
    }
    }
}

} // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw std::invalid_argument("qubit count must be between 1 and " +
                                    std::to_string(kMaxQubits));
    amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amplitudes_[0] = Complex{1.0, 0.0};
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    if (!is_power_of_two(amplitudes.size()) || amplitudes.size() < 2)
        throw std::invalid_argument("amplitude count must be a power of two >= 2");
    int q = 0;
    while ((std::size_t{1} << q) < amplitudes.size()) ++q;
    if (q > kMaxQubits)
        throw std::invalid_argument("amplitude vector exceeds the simulator cap");
    double norm2 = 0.0;
    for (const Complex& a : amplitudes) norm2 += std::norm(a);
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10)
        throw std::invalid_argument("amplitudes must have unit norm");
    StateVector state(q);
    state.amplitudes_ = std::move(amplitudes);
    return state;
}

double StateVector::norm() const {
    double norm2 = 0.0;
    for (const Complex& a : amplitudes_) norm2 += std::norm(a);
    return std::sqrt(norm2);
}

Gate Gate::hadamard(int qubit) { return Gate{Kind::Hadamard, {}, qubit, 0.0}; }

Gate Gate::pauli_x(int qubit) { return Gate{Kind::PauliX, {}, qubit, 0.0}; }

Gate Gate::phase(int qubit, double lambda) {
    check_angle(lambda);
    return Gate{Kind::Phase, {}, qubit, lambda};
}

Gate Gate::mcx(std::vector<int> controls, int target) {
    check_distinct(controls, target);
    return Gate{Kind::MultiControlledX, std::move(controls), target, 0.0};
}

Gate Gate::mcp(std::vector<int> controls, int target, double lambda) {
    check_distinct(controls, target);
    check_angle(lambda);
    return Gate{Kind::MultiControlledPhase, std::move(controls), target, lambda};
}

std::vector<int> Gate::qubits() const {
    std::vector<int> result = controls;
    result.push_back(target);
    return result;
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits)
        throw std::invalid_argument("qubit count must be between 1 and " +
                                    std::to_string(kMaxQubits));
}

void Circuit::append(Gate gate) {
    for (int q : gate.qubits()) check_qubit_index(num_qubits_, q);
    gates_.push_back(std::move(gate));
}

void Circuit::append(const std::vector<Gate>& gates) {
    for (const Gate& g : gates) append(g);
}

void Circuit::set_measurement(int qubit) {
    check_qubit_index(num_qubits_, qubit);
    measured_qubit_ = qubit;
}

int Circuit::size() const {
    return static_cast<int>(gates_.size()) + (measured_qubit_ ? 1 : 0);
}

int Circuit::depth() const {
    std::vector<int> level(num_qubits_, 0);
    for (const Gate& g : gates_) {
        int step = 0;
        for (int q : g.qubits()) step = std::max(step, level[q]);
        ++step;
        for (int q : g.qubits()) level[q] = step;
    }
    if (measured_qubit_) ++level[*measured_qubit_];
    return *std::max_element(level.begin(), level.end());
}

StateVector zero_state(int num_qubits) { return StateVector(num_qubits); }

StateVector apply_gate(StateVector state, const Gate& gate) {
    for (int q : gate.qubits()) check_qubit_index(state.num_qubits(), q);
    apply_in_place(state.amplitudes_, state.num_qubits_, gate);
    return state;
}

StateVector run(const Circuit& circuit, StateVector state) {
    if (circuit.num_qubits() != state.num_qubits())
        throw std::invalid_argument("circuit and state qubit counts differ");
    for (const Gate& g : circuit.gates()) apply_in_place(state.amplitudes_, state.num_qubits_, g);
    return state;
}

double one_probability(const StateVector& state, int qubit) {
    check_qubit_index(state.num_qubits(), qubit);
    const std::size_t mask = std::size_t{1} << bit_position(state.num_qubits(), qubit);
    double p = 0.0;
    const auto& amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i)
        if (i & mask) p += std::norm(amps[i]);
    return p;
}

int sample_shots(const StateVector& state, int qubit, int shots, std::uint64_t seed) {
    if (shots < 1) throw std::invalid_argument("shots must be positive");
    const double p = one_probability(state, qubit);
    Rng rng(seed);
    int count = 0;
    for (int k = 0; k < shots; ++k)
        if (rng.uniform() < p) ++count;
    return count;
}

} // namespace qneuron
