#include "qneuron/framework.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qneuron {

namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

Complex inner_product(const FeatureVector& a, const FeatureVector& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("feature vectors must have equal length");
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < a.dim(); ++k)
        acc += std::conj(a.amplitudes()[k]) * b.amplitudes()[k];
    return acc;
}

} // namespace

FeatureVector::FeatureVector(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty() || !is_power_of_two(amplitudes_.size()))
        throw std::invalid_argument("feature vector length must be a power of two");
    double norm2 = 0.0;
    for (const Complex& a : amplitudes_) norm2 += std::norm(a);
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10)
        throw std::invalid_argument("feature vector must have unit norm");
}

double activation_closed_form(const FeatureVector& weight, const FeatureVector& input) {
    return std::norm(inner_product(weight, input));
}

double fidelity(const FeatureVector& a, const FeatureVector& b) {
    return std::abs(inner_product(a, b));
}

std::string_view to_string(NeuronKind kind) {
    switch (kind) {
    case NeuronKind::Bvqn: return "bvqn";
    case NeuronKind::Cvqn: return "cvqn";
    case NeuronKind::Cdqn: return "cdqn";
    case NeuronKind::Pcdqn: return "pcdqn";
    }
    throw std::invalid_argument("unknown neuron kind");
}

NeuronKind neuron_kind_from_string(std::string_view name) {
    if (name == "bvqn") return NeuronKind::Bvqn;
    if (name == "cvqn") return NeuronKind::Cvqn;
    if (name == "cdqn") return NeuronKind::Cdqn;
    if (name == "pcdqn") return NeuronKind::Pcdqn;
    throw std::invalid_argument("unknown neuron kind: " + std::string(name));
}

std::vector<Gate> NeuronModel::transform_gates(const ClassicalVector& theta,
                                               const ClassicalVector& phi) const {
    std::vector<Gate> gates = encoder_gates(theta);
    std::vector<Gate> decode = decoder_gates(phi);
    gates.insert(gates.end(), decode.begin(), decode.end());
    return gates;
}

Circuit build_framework_circuit(const NeuronModel& neuron, const ClassicalVector& theta,
                                const ClassicalVector& phi) {
    neuron.validate_input(theta);
    neuron.validate_input(phi);
    if (theta.size() != phi.size())
        throw std::invalid_argument("input and weight vectors must have equal length");

    const int n = neuron.data_qubits(static_cast<int>(theta.size()));
    Circuit circuit(n + 1);
    for (int q = 0; q < n; ++q) circuit.append(Gate::hadamard(q));
    circuit.append(neuron.transform_gates(theta, phi));
    for (int q = 0; q < n; ++q) circuit.append(Gate::hadamard(q));
    for (int q = 0; q < n; ++q) circuit.append(Gate::pauli_x(q));
    std::vector<int> controls(n);
    for (int q = 0; q < n; ++q) controls[q] = q;
    circuit.append(Gate::mcx(std::move(controls), n));
    circuit.set_measurement(n);
    return circuit;
}

double activation_from_circuit(const NeuronModel& neuron, const ClassicalVector& theta,
                               const ClassicalVector& phi) {
    const Circuit circuit = build_framework_circuit(neuron, theta, phi);
    const StateVector final_state = run(circuit, zero_state(circuit.num_qubits()));
    return one_probability(final_state, circuit.num_qubits() - 1);
}

} // namespace qneuron
