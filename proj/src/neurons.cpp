#include "qneuron/neurons.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qneuron {

namespace {

constexpr int kMaxDataQubits = kMaxQubits - 1;
// Full-sum CDQN evaluation walks 2^m basis states.
constexpr int kMaxFullSumArity = 20;

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

int log2_exact(std::size_t n) {
    int k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

void check_finite(const ClassicalVector& v) {
    if (v.empty()) throw std::invalid_argument("vector must be non-empty");
    for (double c : v)
        if (!std::isfinite(c)) throw std::invalid_argument("vector components must be finite");
}

void check_same_length(const ClassicalVector& theta, const ClassicalVector& phi) {
    if (theta.size() != phi.size())
        throw std::invalid_argument("input and weight vectors must have equal length");
}

// BVQN/CVQN store m amplitudes over log2(m) qubits.
void check_amplitude_arity(const ClassicalVector& v) {
    check_finite(v);
    if (v.size() < 2 || !is_power_of_two(v.size()))
        throw std::invalid_argument("vector length must be a power of two >= 2");
    if (log2_exact(v.size()) > kMaxDataQubits)
        throw std::invalid_argument("vector length exceeds the simulator cap");
}

// CDQN/PCDQN store one component per qubit.
void check_qubit_arity(const ClassicalVector& v) {
    check_finite(v);
    if (v.size() > static_cast<std::size_t>(kMaxDataQubits))
        throw std::invalid_argument("vector length exceeds the simulator cap");
}

void check_binary(const ClassicalVector& v) {
    for (double c : v)
        if (c != 1.0 && c != -1.0)
            throw std::invalid_argument("binary vector components must be -1 or +1");
}

void check_params(const PcdqnParams& params) {
    if (!std::isfinite(params.tau) || !std::isfinite(params.delta))
        throw std::invalid_argument("tau and delta must be finite");
}

// Bit j of s in m bits, big-endian: bit 0 is the most significant.
int bit_of(std::size_t s, int j, int m) {
    return static_cast<int>((s >> (m - 1 - j)) & 1);
}

// Imparts e^{i lambda} to basis state |j> only: X on the qubits whose bit of
// j is 0, a phase controlled on every data qubit (last qubit as target),
// then the X gates undone.
void append_basis_phase_block(std::vector<Gate>& gates, int n, std::size_t j, double lambda) {
    std::vector<int> zero_bits;
    for (int q = 0; q < n; ++q)
        if (bit_of(j, q, n) == 0) zero_bits.push_back(q);
    for (int q : zero_bits) gates.push_back(Gate::pauli_x(q));
    std::vector<int> controls;
    for (int q = 0; q + 1 < n; ++q) controls.push_back(q);
    gates.push_back(Gate::mcp(std::move(controls), n - 1, lambda));
    for (int q : zero_bits) gates.push_back(Gate::pauli_x(q));
}

FeatureVector phase_qubit_feature_map(const ClassicalVector& phases) {
    const int m = static_cast<int>(phases.size());
    const std::size_t dim = std::size_t{1} << m;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<Complex> amps(dim);
    for (std::size_t s = 0; s < dim; ++s) {
        double phase = 0.0;
        for (int j = 0; j < m; ++j)
            if (bit_of(s, j, m)) phase += phases[j];
        amps[s] = std::polar(scale, phase);
    }
    return FeatureVector(std::move(amps));
}

} // namespace

// --- closed-form activations -------------------------------------------

double bvqn_activation(const ClassicalVector& theta, const ClassicalVector& phi) {
    check_same_length(theta, phi);
    check_amplitude_arity(theta);
    check_binary(theta);
    check_binary(phi);
    double sum = 0.0;
    for (std::size_t j = 0; j < theta.size(); ++j) sum += phi[j] * theta[j];
    const double r = sum / static_cast<double>(theta.size());
    return r * r;
}

double cvqn_activation(const ClassicalVector& theta, const ClassicalVector& phi) {
    check_same_length(theta, phi);
    check_amplitude_arity(theta);
    check_finite(phi);
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < theta.size(); ++j)
        acc += std::polar(1.0, theta[j] - phi[j]);
    return std::norm(acc / static_cast<double>(theta.size()));
}

double cdqn_activation_full(const ClassicalVector& theta, const ClassicalVector& phi) {
    check_same_length(theta, phi);
    check_finite(theta);
    check_finite(phi);
    const int m = static_cast<int>(theta.size());
    if (m > kMaxFullSumArity)
        throw std::invalid_argument("full-sum evaluation capped at m = " +
                                    std::to_string(kMaxFullSumArity));
    const std::size_t dim = std::size_t{1} << m;
    Complex acc{0.0, 0.0};
    for (std::size_t s = 0; s < dim; ++s) {
        double phase = 0.0;
        for (int j = 0; j < m; ++j)
            if (bit_of(s, j, m)) phase += theta[j] - phi[j];
        acc += std::polar(1.0, phase);
    }
    return std::norm(acc / static_cast<double>(dim));
}

double cdqn_activation_product(const ClassicalVector& theta, const ClassicalVector& phi) {
    return pcdqn_activation(theta, phi, PcdqnParams{1.0, 0.0});
}

double pcdqn_activation(const ClassicalVector& theta, const ClassicalVector& phi,
                        const PcdqnParams& params) {
    check_same_length(theta, phi);
    check_finite(theta);
    check_finite(phi);
    check_params(params);
    Complex acc{1.0, 0.0};
    for (std::size_t j = 0; j < theta.size(); ++j)
        acc *= 0.5 * (1.0 + std::polar(1.0, params.tau * (theta[j] - phi[j]) + params.delta));
    return std::norm(acc);
}

// --- feature maps --------------------------------------------------------

FeatureVector bvqn_feature_map(const ClassicalVector& v) {
    check_amplitude_arity(v);
    check_binary(v);
    const double scale = 1.0 / std::sqrt(static_cast<double>(v.size()));
    std::vector<Complex> amps(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) amps[j] = Complex{v[j] * scale, 0.0};
    return FeatureVector(std::move(amps));
}

FeatureVector cvqn_feature_map(const ClassicalVector& v) {
    check_amplitude_arity(v);
    const double scale = 1.0 / std::sqrt(static_cast<double>(v.size()));
    std::vector<Complex> amps(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) amps[j] = std::polar(scale, v[j]);
    return FeatureVector(std::move(amps));
}

FeatureVector cdqn_feature_map(const ClassicalVector& v) {
    check_qubit_arity(v);
    return phase_qubit_feature_map(v);
}

// --- gate builders -------------------------------------------------------

std::vector<Gate> bvqn_gates(const ClassicalVector& v, bool) {
    check_amplitude_arity(v);
    check_binary(v);
    const int n = log2_exact(v.size());
    std::vector<Gate> gates;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] == -1.0) append_basis_phase_block(gates, n, j, std::numbers::pi);
    return gates;
}

std::vector<Gate> cvqn_gates(const ClassicalVector& v, bool invert, bool pruned) {
    check_amplitude_arity(v);
    const int n = log2_exact(v.size());
    const double sign = invert ? -1.0 : 1.0;
    std::vector<Gate> gates;
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (pruned && v[j] == 0.0) continue;
        append_basis_phase_block(gates, n, j, sign * v[j]);
    }
    return gates;
}

std::vector<Gate> cdqn_gates(const ClassicalVector& v, bool invert) {
    check_qubit_arity(v);
    const double sign = invert ? -1.0 : 1.0;
    std::vector<Gate> gates;
    gates.reserve(v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
        gates.push_back(Gate::phase(static_cast<int>(j), sign * v[j]));
    return gates;
}

std::vector<Gate> pcdqn_gates(const ClassicalVector& v, const PcdqnParams& params, bool invert) {
    check_qubit_arity(v);
    check_params(params);
    std::vector<Gate> gates;
    if (!invert) {
        for (std::size_t j = 0; j < v.size(); ++j)
            gates.push_back(Gate::phase(static_cast<int>(j), params.tau * v[j]));
    } else {
        for (std::size_t j = 0; j < v.size(); ++j)
            gates.push_back(Gate::phase(static_cast<int>(j), -params.tau * v[j]));
        for (std::size_t j = 0; j < v.size(); ++j)
            gates.push_back(Gate::phase(static_cast<int>(j), params.delta));
    }
    return gates;
}

std::vector<Gate> pcdqn_fused_gates(const ClassicalVector& theta, const ClassicalVector& phi,
                                    const PcdqnParams& params) {
    check_same_length(theta, phi);
    check_qubit_arity(theta);
    check_finite(phi);
    check_params(params);
    std::vector<Gate> gates;
    gates.reserve(theta.size());
    for (std::size_t j = 0; j < theta.size(); ++j)
        gates.push_back(Gate::phase(static_cast<int>(j),
                                    params.tau * (theta[j] - phi[j]) + params.delta));
    return gates;
}

// --- BVQN -----------------------------------------------------------------

void BvqnNeuron::validate_input(const ClassicalVector& v) const {
    check_amplitude_arity(v);
    check_binary(v);
}

int BvqnNeuron::data_qubits(int m) const { return log2_exact(static_cast<std::size_t>(m)); }

FeatureVector BvqnNeuron::map_to_feature(const ClassicalVector& v) const {
    return bvqn_feature_map(v);
}

std::vector<Gate> BvqnNeuron::encoder_gates(const ClassicalVector& theta) const {
    return bvqn_gates(theta, false);
}

std::vector<Gate> BvqnNeuron::decoder_gates(const ClassicalVector& phi) const {
    return bvqn_gates(phi, true);
}

double BvqnNeuron::activation(const ClassicalVector& theta, const ClassicalVector& phi) const {
    return bvqn_activation(theta, phi);
}

// --- CVQN -----------------------------------------------------------------

void CvqnNeuron::validate_input(const ClassicalVector& v) const { check_amplitude_arity(v); }

int CvqnNeuron::data_qubits(int m) const { return log2_exact(static_cast<std::size_t>(m)); }

FeatureVector CvqnNeuron::map_to_feature(const ClassicalVector& v) const {
    return cvqn_feature_map(v);
}

std::vector<Gate> CvqnNeuron::encoder_gates(const ClassicalVector& theta) const {
    return cvqn_gates(theta, false, pruned_);
}

std::vector<Gate> CvqnNeuron::decoder_gates(const ClassicalVector& phi) const {
    return cvqn_gates(phi, true, pruned_);
}

double CvqnNeuron::activation(const ClassicalVector& theta, const ClassicalVector& phi) const {
    return cvqn_activation(theta, phi);
}

// --- CDQN -----------------------------------------------------------------

void CdqnNeuron::validate_input(const ClassicalVector& v) const { check_qubit_arity(v); }

int CdqnNeuron::data_qubits(int m) const { return m; }

FeatureVector CdqnNeuron::map_to_feature(const ClassicalVector& v) const {
    return cdqn_feature_map(v);
}

std::vector<Gate> CdqnNeuron::encoder_gates(const ClassicalVector& theta) const {
    return cdqn_gates(theta, false);
}

std::vector<Gate> CdqnNeuron::decoder_gates(const ClassicalVector& phi) const {
    return cdqn_gates(phi, true);
}

double CdqnNeuron::activation(const ClassicalVector& theta, const ClassicalVector& phi) const {
    return cdqn_activation_product(theta, phi);
}

// --- PCDQN ----------------------------------------------------------------

void PcdqnNeuron::validate_input(const ClassicalVector& v) const { check_qubit_arity(v); }

int PcdqnNeuron::data_qubits(int m) const { return m; }

FeatureVector PcdqnNeuron::map_to_feature(const ClassicalVector& v) const {
    check_qubit_arity(v);
    ClassicalVector phases(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) phases[j] = params_.tau * v[j];
    return phase_qubit_feature_map(phases);
}

FeatureVector PcdqnNeuron::map_weight_to_feature(const ClassicalVector& v) const {
    check_qubit_arity(v);
    ClassicalVector phases(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) phases[j] = params_.tau * v[j] - params_.delta;
    return phase_qubit_feature_map(phases);
}

std::vector<Gate> PcdqnNeuron::encoder_gates(const ClassicalVector& theta) const {
    return pcdqn_gates(theta, params_, false);
}

std::vector<Gate> PcdqnNeuron::decoder_gates(const ClassicalVector& phi) const {
    return pcdqn_gates(phi, params_, true);
}

std::vector<Gate> PcdqnNeuron::transform_gates(const ClassicalVector& theta,
                                               const ClassicalVector& phi) const {
    if (fused_) return pcdqn_fused_gates(theta, phi, params_);
    return NeuronModel::transform_gates(theta, phi);
}

double PcdqnNeuron::activation(const ClassicalVector& theta, const ClassicalVector& phi) const {
    return pcdqn_activation(theta, phi, params_);
}

std::unique_ptr<NeuronModel> make_neuron(NeuronKind kind, std::optional<PcdqnParams> params) {
    switch (kind) {
    case NeuronKind::Bvqn: return std::make_unique<BvqnNeuron>();
    case NeuronKind::Cvqn: return std::make_unique<CvqnNeuron>();
    case NeuronKind::Cdqn: return std::make_unique<CdqnNeuron>();
    case NeuronKind::Pcdqn:
        if (!params) throw std::invalid_argument("the PCDQN requires tau and delta");
        return std::make_unique<PcdqnNeuron>(*params);
    }
    throw std::invalid_argument("unknown neuron kind");
}

} // namespace qneuron
