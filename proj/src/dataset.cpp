#include "qneuron/dataset.hpp"

#include "qneuron/errors.hpp"
#include "qneuron/io_util.hpp"
#include "qneuron/rng.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qneuron {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void check_consistent(const LabeledDataset& d) {
    if (d.samples.size() != d.labels.size())
        throw std::invalid_argument("sample and label counts differ");
}

double parse_double(const std::string& field) {
    const char* begin = field.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end != begin + field.size() || field.empty())
        throw IoError("malformed CSV number: '" + field + "'");
    return value;
}

} // namespace

std::size_t LabeledDataset::positives() const {
    std::size_t count = 0;
    for (int l : labels) count += (l != 0);
    return count;
}

LabeledDataset gen_diagonal_blobs(std::uint64_t seed) {
    struct Blob {
        double cx, cy;
        int count, label;
    };
    // 50 positives in the middle cluster, 25 negatives per flanking cluster.
    const Blob blobs[] = {{-5.0, 8.0, 25, 0}, {0.0, 0.0, 50, 1}, {5.0, -8.0, 25, 0}};
    constexpr double kStd = 1.2;

    Rng rng(seed);
    LabeledDataset d;
    for (const Blob& blob : blobs) {
        for (int k = 0; k < blob.count; ++k) {
            const double x = blob.cx + kStd * rng.normal();
            const double y = blob.cy + kStd * rng.normal();
            d.samples.push_back({x, y});
            d.labels.push_back(blob.label);
        }
    }
    return d;
}

LabeledDataset gen_concentric_circles(std::uint64_t seed, double noise) {
    if (!(noise >= 0.0)) throw std::invalid_argument("noise must be non-negative");
    constexpr int kPerCircle = 50;
    struct Ring {
        double radius;
        int label;
    };
    const Ring rings[] = {{1.0, 0}, {0.4, 1}}; // outer first, inner is positive

    Rng rng(seed);
    LabeledDataset d;
    for (const Ring& ring : rings) {
        for (int k = 0; k < kPerCircle; ++k) {
            const double angle = 2.0 * std::numbers::pi * k / kPerCircle;
            const double x = ring.radius * std::cos(angle) + noise * rng.normal();
            const double y = ring.radius * std::sin(angle) + noise * rng.normal();
            d.samples.push_back({x, y});
            d.labels.push_back(ring.label);
        }
    }
    return d;
}

LabeledDataset gen_square_blobs(std::uint64_t seed, double stddev, int n_per_blob) {
    if (!(stddev >= 0.0)) throw std::invalid_argument("stddev must be non-negative");
    if (n_per_blob < 1) throw std::invalid_argument("n_per_blob must be positive");
    struct Blob {
        double cx, cy;
        int label;
    };
    const Blob blobs[] = {{0.0, 0.0, 0}, {0.0, kHalfPi, 1}, {kHalfPi, 0.0, 1}, {kHalfPi, kHalfPi, 0}};

    Rng rng(seed);
    LabeledDataset d;
    for (const Blob& blob : blobs) {
        for (int k = 0; k < n_per_blob; ++k) {
            const double x = blob.cx + stddev * rng.normal();
            const double y = blob.cy + stddev * rng.normal();
            d.samples.push_back({x, y});
            d.labels.push_back(blob.label);
        }
    }
    return d;
}

LabeledDataset swap_labels(LabeledDataset dataset) {
    check_consistent(dataset);
    for (int& l : dataset.labels) l = 1 - l;
    return dataset;
}

LabeledDataset minmax_scale(LabeledDataset dataset) {
    check_consistent(dataset);
    if (dataset.samples.empty()) throw DegenerateInputError("cannot scale an empty dataset");
    for (std::size_t f = 0; f < 2; ++f) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const auto& s : dataset.samples) {
            lo = std::min(lo, s[f]);
            hi = std::max(hi, s[f]);
        }
        if (!(hi > lo))
            throw DegenerateInputError("feature " + std::to_string(f) + " has zero range");
        if (lo == 0.0 && hi == kHalfPi) continue; // already spans the target interval
        for (auto& s : dataset.samples) s[f] = (s[f] - lo) / (hi - lo) * kHalfPi;
    }
    dataset.scaled = true;
    return dataset;
}

void write_csv(const LabeledDataset& dataset, std::ostream& out) {
    check_consistent(dataset);
    out << "x0,x1,label\n";
    for (std::size_t i = 0; i < dataset.size(); ++i)
        out << format_double(dataset.samples[i][0]) << ',' << format_double(dataset.samples[i][1])
            << ',' << dataset.labels[i] << '\n';
}

void write_csv_file(const LabeledDataset& dataset, const std::string& path) {
    std::ofstream file(path);
    if (!file) throw IoError("cannot open for writing: " + path);
    write_csv(dataset, file);
    file.flush();
    if (!file) throw IoError("write failed: " + path);
}

LabeledDataset read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty CSV input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "x0,x1,label") throw IoError("unexpected CSV header: '" + line + "'");

    LabeledDataset d;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string x0, x1, label;
        if (!std::getline(row, x0, ',') || !std::getline(row, x1, ',') ||
            !std::getline(row, label))
            throw IoError("malformed CSV row: '" + line + "'");
        d.samples.push_back({parse_double(x0), parse_double(x1)});
        if (label == "0")
            d.labels.push_back(0);
        else if (label == "1")
            d.labels.push_back(1);
        else
            throw IoError("label must be 0 or 1, got '" + label + "'");
    }
    return d;
}

LabeledDataset read_csv_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw IoError("cannot open for reading: " + path);
    return read_csv(file);
}

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

} // namespace qneuron
