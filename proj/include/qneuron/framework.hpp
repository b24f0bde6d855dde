#pragma once

#include "qneuron/statevector.hpp"

#include <memory>
#include <string_view>
#include <vector>

namespace qneuron {

// Classical parameter vector in radians. Scaling to [0, pi/2] is the
// caller's responsibility (see minmax_scale).
using ClassicalVector = std::vector<double>;

// Unit-norm complex vector of power-of-two length; the image of a classical
// vector under a neuron's feature map.
class FeatureVector {
public:
    explicit FeatureVector(std::vector<Complex> amplitudes);

    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }

private:
    std::vector<Complex> amplitudes_;
};

// |w* . i|^2 — the probability that the neuron fires.
double activation_closed_form(const FeatureVector& weight, const FeatureVector& input);

// |<a|b>|; equals 1 when the vectors agree up to a global phase.
double fidelity(const FeatureVector& a, const FeatureVector& b);

enum class NeuronKind { Bvqn, Cvqn, Cdqn, Pcdqn };

std::string_view to_string(NeuronKind kind);
NeuronKind neuron_kind_from_string(std::string_view name);

// A neuron is a feature map plus gate realizations of the encode operator E
// (|+>^n to the mapped input) and the decode operator D (the mapped weight
// back to |+>^n). Any implementation of this interface can be dropped into
// the framework circuit below.
class NeuronModel {
public:
    virtual ~NeuronModel() = default;

    virtual NeuronKind kind() const = 0;
    std::string_view name() const { return to_string(kind()); }

    // Throws std::invalid_argument when v violates the neuron's arity or
    // domain rule.
    virtual void validate_input(const ClassicalVector& v) const = 0;

    // Data qubits needed for an m-component vector.
    virtual int data_qubits(int m) const = 0;

    // Feature map applied to input vectors.
    virtual FeatureVector map_to_feature(const ClassicalVector& v) const = 0;

    // Feature map applied to weight vectors. Identical to map_to_feature
    // except for the PCDQN: its delta shift acts on the encode/decode
    // difference, which puts -delta on the weight side of the kernel.
    virtual FeatureVector map_weight_to_feature(const ClassicalVector& v) const {
        return map_to_feature(v);
    }

    virtual std::vector<Gate> encoder_gates(const ClassicalVector& theta) const = 0;
    virtual std::vector<Gate> decoder_gates(const ClassicalVector& phi) const = 0;

    // Gates between the two Hadamard layers of the framework circuit:
    // encoder followed by decoder unless the neuron fuses them.
    virtual std::vector<Gate> transform_gates(const ClassicalVector& theta,
                                              const ClassicalVector& phi) const;

    // Closed-form firing probability.
    virtual double activation(const ClassicalVector& theta, const ClassicalVector& phi) const = 0;
};

// H^n . E(theta) . D(phi) . H^n . X^n on the data qubits, a multi-controlled
// NOT from every data qubit onto the ancilla (the last qubit), and a
// measurement marker on the ancilla.
Circuit build_framework_circuit(const NeuronModel& neuron, const ClassicalVector& theta,
                                const ClassicalVector& phi);

// Runs the framework circuit on |0...0> and returns the ancilla's
// one-probability; equals the neuron's closed-form activation.
double activation_from_circuit(const NeuronModel& neuron, const ClassicalVector& theta,
                               const ClassicalVector& phi);

} // namespace qneuron
