#pragma once

#include "qneuron/dataset.hpp"
#include "qneuron/neurons.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qneuron {

// Mann-Whitney statistic with midrank tie handling: over all
// positive/negative pairs, the fraction scored strictly higher plus half
// the ties. Complementary by construction: auc on swapped labels is exactly
// 1 minus auc on the original. Throws DegenerateInputError when only one
// class is present.
double auc_roc(const std::vector<double>& scores, const std::vector<int>& labels);

// All (phi0, phi1) with each component on `resolution` equidistant values
// spanning [0, pi/2] inclusive; lexicographic, phi0 outer.
std::vector<ClassicalVector> weight_grid(int resolution = 100);

// tau in {1/4, 1/2, 1, 2, 4} x delta in {0, pi/4, ..., 3pi/2} minus (1, 0);
// tau outer ascending, delta inner ascending. 34 combinations.
std::vector<PcdqnParams> param_grid();

struct SearchResult {
    ClassicalVector best_weights;
    std::optional<PcdqnParams> best_params;
    double best_auc = 0.0;
    std::size_t evaluations = 0;
};

// Scans the weight grid (CVQN, CDQN) or param_grid x weight grid (PCDQN,
// params outer) scoring closed-form activations against every candidate
// weight, and returns the first maximizer of auc_roc in iteration order.
// Strictly greater AUC replaces the incumbent; ties keep the earlier
// candidate.
SearchResult grid_search(NeuronKind kind, const LabeledDataset& dataset, int resolution = 100);

enum class MetricKind { Manhattan, Euclidean, Linear, Polynomial, Rbf, Sigmoid };

std::string_view to_string(MetricKind kind);
MetricKind metric_kind_from_string(std::string_view name);

// Kernel hyperparameters follow the reference library defaults:
// polynomial (gamma <x,y> + 1)^3, rbf exp(-gamma ||x-y||^2), sigmoid
// tanh(gamma <x,y> + 1), all with gamma = 1/m.
double metric(MetricKind kind, const ClassicalVector& x, const ClassicalVector& y);

struct ShapePoint {
    ClassicalVector input;
    double metric_value = 0.0;
    double activation = 0.0;
};

// 100 input vectors (10 x 10 endpoint-inclusive grid over [0, pi/2]^2),
// each paired with its metric to the fixed reference weight (pi/2, pi/2)
// and its closed-form activation.
std::vector<ShapePoint> shape_study(NeuronKind kind, std::optional<PcdqnParams> params,
                                    MetricKind metric_kind);

// Builds the framework circuit, samples the ancilla `shots` times and
// returns the fraction of 1 outcomes.
double estimate_activation(NeuronKind kind, std::optional<PcdqnParams> params,
                           const ClassicalVector& theta, const ClassicalVector& phi,
                           int shots = 20000, std::uint64_t seed = 0);

struct GrowthRow {
    NeuronKind neuron;
    int m = 0;
    int depth = 0;
    int size = 0;
};

// Depth and size of the full framework circuit per input arity. Canonical
// inputs: all-zero vectors (all -1 for the BVQN) so every block is emitted.
std::vector<GrowthRow> circuit_growth(NeuronKind kind, const std::vector<int>& m_values,
                                      bool fused = false);

// --- report writers ------------------------------------------------------

struct SearchReport {
    std::string dataset;
    std::string target;
    NeuronKind neuron = NeuronKind::Cvqn;
    SearchResult result;
};

// JSON object {auc, dataset, delta, evaluations, neuron, phi0, phi1,
// target, tau}; tau/delta are null for non-PCDQN neurons.
void write_search_report(const SearchReport& report, std::ostream& out);

// CSV "input_x0,input_x1,metric,metric_value,activation".
void write_shape_csv(const std::vector<ShapePoint>& points, MetricKind kind, std::ostream& out);

// CSV "neuron,m,depth,size".
void write_growth_csv(const std::vector<GrowthRow>& rows, std::ostream& out);

struct EstimateRow {
    std::size_t sample_index = 0;
    double x0 = 0.0;
    double x1 = 0.0;
    int label = 0;
    double p_closed = 0.0;
    double p_estimated = 0.0;
    int shots = 0;
    std::uint64_t seed = 0;
};

// Shot-based estimates for every sample of a dataset against a fixed
// weight vector; row k uses seed base_seed + k.
std::vector<EstimateRow> estimate_dataset(NeuronKind kind, std::optional<PcdqnParams> params,
                                          const LabeledDataset& dataset,
                                          const ClassicalVector& weights, int shots,
                                          std::uint64_t base_seed);

// CSV "sample_index,x0,x1,label,p_closed,p_estimated,shots,seed".
void write_estimate_csv(const std::vector<EstimateRow>& rows, std::ostream& out);

} // namespace qneuron
