#include "qneuron/analysis.hpp"

#include "qneuron/errors.hpp"
#include "qneuron/io_util.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace qneuron {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_classes(const std::vector<int>& labels) {
    bool has_pos = false, has_neg = false;
    for (int l : labels) (l != 0 ? has_pos : has_neg) = true;
    if (!has_pos || !has_neg)
        throw DegenerateInputError("both classes must be present");
}

ClassicalVector sample_vector(const LabeledDataset& d, std::size_t i) {
    return {d.samples[i][0], d.samples[i][1]};
}

double score_activation(NeuronKind kind, const std::optional<PcdqnParams>& params,
                        const ClassicalVector& theta, const ClassicalVector& phi) {
    switch (kind) {
    case NeuronKind::Cvqn: return cvqn_activation(theta, phi);
    case NeuronKind::Cdqn: return cdqn_activation_product(theta, phi);
    case NeuronKind::Pcdqn: return pcdqn_activation(theta, phi, params.value());
    default: throw std::invalid_argument("unsupported neuron kind");
    }
}

} // namespace

double auc_roc(const std::vector<double>& scores, const std::vector<int>& labels) {
    if (scores.size() != labels.size())
        throw std::invalid_argument("score and label counts differ");
    if (scores.empty()) throw DegenerateInputError("both classes must be present");
    check_classes(labels);

    const std::size_t n = scores.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Twice the positive rank sum stays integer-valued under midranks.
    double rank2_pos = 0.0;
    std::size_t n_pos = 0;
    for (std::size_t a = 0; a < n;) {
        std::size_t b = a + 1;
        while (b < n && scores[order[b]] == scores[order[a]]) ++b;
        const double rank2 = static_cast<double>(a + 1 + b); // 2 x midrank, 1-based
        for (std::size_t k = a; k < b; ++k)
            if (labels[order[k]] != 0) rank2_pos += rank2;
        a = b;
    }
    for (int l : labels) n_pos += (l != 0);
    const std::size_t n_neg = n - n_pos;

    const double numerator = rank2_pos - static_cast<double>(n_pos) * (n_pos + 1);
    const double denominator = 2.0 * static_cast<double>(n_pos) * static_cast<double>(n_neg);
    // Complementary pair sums to exactly 1: compute the smaller side's ratio
    // directly and derive the other from it.
    if (2.0 * numerator <= denominator) return numerator / denominator;
    return 1.0 - (denominator - numerator) / denominator;
}

std::vector<ClassicalVector> weight_grid(int resolution) {
    if (resolution < 2) throw std::invalid_argument("resolution must be at least 2");
    std::vector<double> values(resolution);
    for (int k = 0; k < resolution; ++k)
        values[k] = kHalfPi * (static_cast<double>(k) / (resolution - 1));
    std::vector<ClassicalVector> grid;
    grid.reserve(static_cast<std::size_t>(resolution) * resolution);
    for (double phi0 : values)
        for (double phi1 : values) grid.push_back({phi0, phi1});
    return grid;
}

std::vector<PcdqnParams> param_grid() {
    const double taus[] = {0.25, 0.5, 1.0, 2.0, 4.0};
    std::vector<PcdqnParams> grid;
    grid.reserve(34);
    for (double tau : taus)
        for (int k = 0; k <= 6; ++k) {
            if (tau == 1.0 && k == 0) continue; // (1, 0) is the CDQN
            grid.push_back({tau, std::numbers::pi * k / 4.0});
        }
    return grid;
}

SearchResult grid_search(NeuronKind kind, const LabeledDataset& dataset, int resolution) {
    if (kind != NeuronKind::Cvqn && kind != NeuronKind::Cdqn && kind != NeuronKind::Pcdqn)
        throw std::invalid_argument("grid search supports cvqn, cdqn and pcdqn");
    if (!dataset.scaled) throw std::invalid_argument("grid search requires a scaled dataset");
    if (dataset.samples.size() != dataset.labels.size())
        throw std::invalid_argument("sample and label counts differ");
    check_classes(dataset.labels);

    const std::vector<ClassicalVector> weights = weight_grid(resolution);
    std::vector<ClassicalVector> inputs(dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i) inputs[i] = sample_vector(dataset, i);

    SearchResult best;
    best.best_auc = -1.0;
    std::vector<double> scores(dataset.size());

    auto consider = [&](const ClassicalVector& w, const std::optional<PcdqnParams>& p) {
        for (std::size_t i = 0; i < inputs.size(); ++i)
            scores[i] = score_activation(kind, p, inputs[i], w);
        const double auc = auc_roc(scores, dataset.labels);
        ++best.evaluations;
        if (auc > best.best_auc) {
            best.best_auc = auc;
            best.best_weights = w;
            best.best_params = p;
        }
    };

    if (kind == NeuronKind::Pcdqn) {
        for (const PcdqnParams& p : param_grid())
            for (const ClassicalVector& w : weights) consider(w, p);
    } else {
        for (const ClassicalVector& w : weights) consider(w, std::nullopt);
    }
    return best;
}

std::string_view to_string(MetricKind kind) {
    switch (kind) {
    case MetricKind::Manhattan: return "manhattan";
    case MetricKind::Euclidean: return "euclidean";
    case MetricKind::Linear: return "linear";
    case MetricKind::Polynomial: return "polynomial";
    case MetricKind::Rbf: return "rbf";
    case MetricKind::Sigmoid: return "sigmoid";
    }
    throw std::invalid_argument("unknown metric kind");
}

MetricKind metric_kind_from_string(std::string_view name) {
    if (name == "manhattan") return MetricKind::Manhattan;
    if (name == "euclidean") return MetricKind::Euclidean;
    if (name == "linear") return MetricKind::Linear;
    if (name == "polynomial") return MetricKind::Polynomial;
    if (name == "rbf") return MetricKind::Rbf;
    if (name == "sigmoid") return MetricKind::Sigmoid;
    throw std::invalid_argument("unknown metric kind: " + std::string(name));
}

double metric(MetricKind kind, const ClassicalVector& x, const ClassicalVector& y) {
    if (x.size() != y.size() || x.empty())
        throw std::invalid_argument("metric requires equal non-empty vectors");
    const double gamma = 1.0 / static_cast<double>(x.size());
    const double coef0 = 1.0;

    double dot = 0.0, abs_sum = 0.0, dist2 = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double diff = x[j] - y[j];
        dot += x[j] * y[j];
        abs_sum += std::abs(diff);
        dist2 += diff * diff;
    }
    switch (kind) {
    case MetricKind::Manhattan: return abs_sum;
    case MetricKind::Euclidean: return std::sqrt(dist2);
    case MetricKind::Linear: return dot;
    case MetricKind::Polynomial: return std::pow(gamma * dot + coef0, 3.0);
    case MetricKind::Rbf: return std::exp(-gamma * dist2);
    case MetricKind::Sigmoid: return std::tanh(gamma * dot + coef0);
    }
    throw std::invalid_argument("unknown metric kind");
}

std::vector<ShapePoint> shape_study(NeuronKind kind, std::optional<PcdqnParams> params,
                                    MetricKind metric_kind) {
    constexpr int kSteps = 10;
    const ClassicalVector weight = {kHalfPi, kHalfPi};
    const auto neuron = make_neuron(kind, params);

    std::vector<double> values(kSteps);
    for (int k = 0; k < kSteps; ++k)
        values[k] = kHalfPi * (static_cast<double>(k) / (kSteps - 1));

    std::vector<ShapePoint> points;
    points.reserve(kSteps * kSteps);
    for (double v0 : values)
        for (double v1 : values) {
            ClassicalVector input = {v0, v1};
            points.push_back({input, metric(metric_kind, input, weight),
                              neuron->activation(input, weight)});
        }
    return points;
}

double estimate_activation(NeuronKind kind, std::optional<PcdqnParams> params,
                           const ClassicalVector& theta, const ClassicalVector& phi, int shots,
                           std::uint64_t seed) {
    const auto neuron = make_neuron(kind, params);
    const Circuit circuit = build_framework_circuit(*neuron, theta, phi);
    const StateVector state = run(circuit, zero_state(circuit.num_qubits()));
    const int count = sample_shots(state, circuit.num_qubits() - 1, shots, seed);
    return static_cast<double>(count) / shots;
}

std::vector<GrowthRow> circuit_growth(NeuronKind kind, const std::vector<int>& m_values,
                                      bool fused) {
    std::vector<GrowthRow> rows;
    rows.reserve(m_values.size());
    for (int m : m_values) {
        if (m < 1) throw std::invalid_argument("m must be positive");
        const ClassicalVector v(static_cast<std::size_t>(m),
                                kind == NeuronKind::Bvqn ? -1.0 : 0.0);
        std::unique_ptr<NeuronModel> neuron;
        if (kind == NeuronKind::Pcdqn)
            neuron = std::make_unique<PcdqnNeuron>(PcdqnParams{1.0, 0.0}, fused);
        else
            neuron = make_neuron(kind);
        const Circuit circuit = build_framework_circuit(*neuron, v, v);
        rows.push_back({kind, m, circuit.depth(), circuit.size()});
    }
    return rows;
}

void write_search_report(const SearchReport& report, std::ostream& out) {
    nlohmann::json j;
    j["dataset"] = report.dataset;
    j["target"] = report.target;
    j["neuron"] = std::string(to_string(report.neuron));
    if (report.result.best_params) {
        j["tau"] = report.result.best_params->tau;
        j["delta"] = report.result.best_params->delta;
    } else {
        j["tau"] = nullptr;
        j["delta"] = nullptr;
    }
    j["phi0"] = report.result.best_weights.at(0);
    j["phi1"] = report.result.best_weights.at(1);
    j["auc"] = report.result.best_auc;
    j["evaluations"] = report.result.evaluations;
    out << j.dump(2) << '\n';
}

void write_shape_csv(const std::vector<ShapePoint>& points, MetricKind kind, std::ostream& out) {
    out << "input_x0,input_x1,metric,metric_value,activation\n";
    for (const ShapePoint& p : points)
        out << format_double(p.input.at(0)) << ',' << format_double(p.input.at(1)) << ','
            << to_string(kind) << ',' << format_double(p.metric_value) << ','
            << format_double(p.activation) << '\n';
}

void write_growth_csv(const std::vector<GrowthRow>& rows, std::ostream& out) {
    out << "neuron,m,depth,size\n";
    for (const GrowthRow& r : rows)
        out << to_string(r.neuron) << ',' << r.m << ',' << r.depth << ',' << r.size << '\n';
}

std::vector<EstimateRow> estimate_dataset(NeuronKind kind, std::optional<PcdqnParams> params,
                                          const LabeledDataset& dataset,
                                          const ClassicalVector& weights, int shots,
                                          std::uint64_t base_seed) {
    const auto neuron = make_neuron(kind, params);
    std::vector<EstimateRow> rows;
    rows.reserve(dataset.size());
    for (std::size_t i = 0; i < dataset.size(); ++i) {
        const ClassicalVector theta = sample_vector(dataset, i);
        const std::uint64_t seed = base_seed + i;
        EstimateRow row;
        row.sample_index = i;
        row.x0 = theta[0];
        row.x1 = theta[1];
        row.label = dataset.labels[i];
        row.p_closed = neuron->activation(theta, weights);
        row.p_estimated = estimate_activation(kind, params, theta, weights, shots, seed);
        row.shots = shots;
        row.seed = seed;
        rows.push_back(row);
    }
    return rows;
}

void write_estimate_csv(const std::vector<EstimateRow>& rows, std::ostream& out) {
    out << "sample_index,x0,x1,label,p_closed,p_estimated,shots,seed\n";
    for (const EstimateRow& r : rows)
        out << r.sample_index << ',' << format_double(r.x0) << ',' << format_double(r.x1) << ','
            << r.label << ',' << format_double(r.p_closed) << ',' << format_double(r.p_estimated)
            << ',' << r.shots << ',' << r.seed << '\n';
}

} // namespace qneuron
