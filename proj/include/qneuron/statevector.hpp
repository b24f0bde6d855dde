#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace qneuron {

using Complex = std::complex<double>;

// Maximum simulated register width: 12 data qubits plus one ancilla.
inline constexpr int kMaxQubits = 13;

class Gate;
class Circuit;

// Dense statevector over num_qubits qubits. Qubit 0 is the most significant
// bit of a basis index (big-endian).
class StateVector {
public:
    // |0...0>
    explicit StateVector(int num_qubits);

    // Wraps an existing amplitude vector; the length must be a power of two
    // covering at most kMaxQubits qubits and the norm must be 1 within 1e-10.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    Complex amplitude(std::size_t index) const { return amplitudes_.at(index); }
    double norm() const;

    bool operator==(const StateVector&) const = default;

private:
    friend StateVector apply_gate(StateVector state, const Gate& gate);
    friend StateVector run(const Circuit& circuit, StateVector state);

    int num_qubits_;
    std::vector<Complex> amplitudes_;
};

struct Gate {
    enum class Kind { Hadamard, PauliX, Phase, MultiControlledX, MultiControlledPhase };

    Kind kind = Kind::Hadamard;
    std::vector<int> controls; // empty for single-qubit kinds
    int target = 0;
    double angle = 0.0; // Phase / MultiControlledPhase only

    static Gate hadamard(int qubit);
    static Gate pauli_x(int qubit);
    static Gate phase(int qubit, double lambda);
    static Gate mcx(std::vector<int> controls, int target);
    static Gate mcp(std::vector<int> controls, int target, double lambda);

    // Controls followed by the target.
    std::vector<int> qubits() const;

    bool operator==(const Gate&) const = default;
};

// Ordered gate list over a fixed number of qubits with an optional
// measurement marker. The marker participates in depth/size accounting;
// simulation returns the full statevector.
class Circuit {
public:
    explicit Circuit(int num_qubits);

    void append(Gate gate);
    void append(const std::vector<Gate>& gates);
    void set_measurement(int qubit);

    int num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::optional<int> measured_qubit() const { return measured_qubit_; }

    // Gate count, plus one for the measurement when present.
    int size() const;
    // Longest qubit-time path: every gate occupies all its qubits (controls
    // and target) for one step; the measurement occupies its qubit for one.
    int depth() const;

private:
    int num_qubits_;
    std::vector<Gate> gates_;
    std::optional<int> measured_qubit_;
};

StateVector zero_state(int num_qubits);
StateVector apply_gate(StateVector state, const Gate& gate);
StateVector run(const Circuit& circuit, StateVector state);

// Probability of measuring |1> on the given qubit.
double one_probability(const StateVector& state, int qubit);

// Number of 1 outcomes among `shots` independent measurements of `qubit`,
// i.e. a binomial draw with p = one_probability. Deterministic given the
// seed: outcome k is 1 iff the k-th Rng uniform is below p.
int sample_shots(const StateVector& state, int qubit, int shots, std::uint64_t seed);

} // namespace qneuron
