#pragma once

#include "qneuron/framework.hpp"

#include <optional>

namespace qneuron {

// Multiplicative factor and additive phase constant of the PCDQN. (1, 0)
// reproduces the CDQN and is permitted here; the experiment parameter grid
// excludes it.
struct PcdqnParams {
    double tau = 1.0;
    double delta = 0.0;

    bool operator==(const PcdqnParams&) const = default;
};

// --- closed-form activations -------------------------------------------

// |(1/N) sum_j phi_j theta_j|^2 over components in {-1, +1}, N = m.
double bvqn_activation(const ClassicalVector& theta, const ClassicalVector& phi);

// |(1/N) sum_j e^{i(theta_j - phi_j)}|^2, N = m.
double cvqn_activation(const ClassicalVector& theta, const ClassicalVector& phi);

// |(1/N) sum_s prod_j (e^{i(theta_j - phi_j)})^{b_{j,s,m}}|^2, N = 2^m,
// where b_{j,s,m} is bit j of s in m bits, big-endian. Exponential in m.
double cdqn_activation_full(const ClassicalVector& theta, const ClassicalVector& phi);

// |(1/N) prod_j (1 + e^{i(theta_j - phi_j)})|^2, N = 2^m; the linear-time
// form of cdqn_activation_full.
double cdqn_activation_product(const ClassicalVector& theta, const ClassicalVector& phi);

// |(1/N) prod_j (1 + e^{i[tau(theta_j - phi_j) + delta]})|^2, N = 2^m.
double pcdqn_activation(const ClassicalVector& theta, const ClassicalVector& phi,
                        const PcdqnParams& params);

// --- feature maps --------------------------------------------------------

// v / sqrt(m) for components in {-1, +1}; m a power of two >= 2.
FeatureVector bvqn_feature_map(const ClassicalVector& v);

// (1/sqrt(m)) (e^{i v_0}, ..., e^{i v_{m-1}}); m a power of two >= 2.
FeatureVector cvqn_feature_map(const ClassicalVector& v);

// Component s carries phase sum_j v_j b_{j,s,m}; length 2^m, any m >= 1 up
// to the simulator cap.
FeatureVector cdqn_feature_map(const ClassicalVector& v);

// --- gate builders -------------------------------------------------------

// One sign-flip block per component with v_j = -1: X conjugation on the
// zero bits of j around a fully controlled Phase(pi). Self-inverse, so the
// invert flag has no effect.
std::vector<Gate> bvqn_gates(const ClassicalVector& v, bool invert = false);

// One phase block per component j, imparting e^{+/- i v_j} to basis |j>.
// The sign is negative when invert is set (decoder). Blocks with v_j = 0
// are emitted unless pruned is set, keeping gate counts input-independent.
std::vector<Gate> cvqn_gates(const ClassicalVector& v, bool invert, bool pruned = false);

// Phase(+/- v_j) on qubit j.
std::vector<Gate> cdqn_gates(const ClassicalVector& v, bool invert);

// Expanded form: Phase(tau v_j) per qubit for the encoder; Phase(-tau v_j)
// per qubit plus one Phase(delta) layer for the decoder.
std::vector<Gate> pcdqn_gates(const ClassicalVector& v, const PcdqnParams& params, bool invert);

// Fused form: a single Phase per qubit carrying the combined angle
// tau (theta_j - phi_j) + delta. Replaces encoder and decoder together.
std::vector<Gate> pcdqn_fused_gates(const ClassicalVector& theta, const ClassicalVector& phi,
                                    const PcdqnParams& params);

// --- neuron models -------------------------------------------------------

class BvqnNeuron final : public NeuronModel {
public:
    NeuronKind kind() const override { return NeuronKind::Bvqn; }
    void validate_input(const ClassicalVector& v) const override;
    int data_qubits(int m) const override;
    FeatureVector map_to_feature(const ClassicalVector& v) const override;
    std::vector<Gate> encoder_gates(const ClassicalVector& theta) const override;
    std::vector<Gate> decoder_gates(const ClassicalVector& phi) const override;
    double activation(const ClassicalVector& theta, const ClassicalVector& phi) const override;
};

class CvqnNeuron final : public NeuronModel {
public:
    explicit CvqnNeuron(bool pruned = false) : pruned_(pruned) {}

    NeuronKind kind() const override { return NeuronKind::Cvqn; }
    void validate_input(const ClassicalVector& v) const override;
    int data_qubits(int m) const override;
    FeatureVector map_to_feature(const ClassicalVector& v) const override;
    std::vector<Gate> encoder_gates(const ClassicalVector& theta) const override;
    std::vector<Gate> decoder_gates(const ClassicalVector& phi) const override;
    double activation(const ClassicalVector& theta, const ClassicalVector& phi) const override;

private:
    bool pruned_;
};

class CdqnNeuron final : public NeuronModel {
public:
    NeuronKind kind() const override { return NeuronKind::Cdqn; }
    void validate_input(const ClassicalVector& v) const override;
    int data_qubits(int m) const override;
    FeatureVector map_to_feature(const ClassicalVector& v) const override;
    std::vector<Gate> encoder_gates(const ClassicalVector& theta) const override;
    std::vector<Gate> decoder_gates(const ClassicalVector& phi) const override;
    double activation(const ClassicalVector& theta, const ClassicalVector& phi) const override;
};

class PcdqnNeuron final : public NeuronModel {
public:
    explicit PcdqnNeuron(PcdqnParams params, bool fused = false)
        : params_(params), fused_(fused) {}

    const PcdqnParams& params() const { return params_; }
    bool fused() const { return fused_; }

    NeuronKind kind() const override { return NeuronKind::Pcdqn; }
    void validate_input(const ClassicalVector& v) const override;
    int data_qubits(int m) const override;
    FeatureVector map_to_feature(const ClassicalVector& v) const override;
    FeatureVector map_weight_to_feature(const ClassicalVector& v) const override;
    std::vector<Gate> encoder_gates(const ClassicalVector& theta) const override;
    std::vector<Gate> decoder_gates(const ClassicalVector& phi) const override;
    std::vector<Gate> transform_gates(const ClassicalVector& theta,
                                      const ClassicalVector& phi) const override;
    double activation(const ClassicalVector& theta, const ClassicalVector& phi) const override;

private:
    PcdqnParams params_;
    bool fused_;
};

// params is required for the PCDQN and ignored otherwise.
std::unique_ptr<NeuronModel> make_neuron(NeuronKind kind,
                                         std::optional<PcdqnParams> params = std::nullopt);

} // namespace qneuron
