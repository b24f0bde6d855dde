#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qneuron {

// Two-dimensional samples with binary labels. `scaled` marks datasets whose
// coordinates have been mapped to [0, pi/2].
struct LabeledDataset {
    std::vector<std::array<double, 2>> samples;
    std::vector<int> labels;
    bool scaled = false;

    std::size_t size() const { return samples.size(); }
    std::size_t positives() const;
};

// Three isotropic Gaussian clusters with std 1.2 on a diagonal, centered at
// (-5, 8), (0, 0) and (5, -8). The middle cluster is the positive class
// with 50 samples; the flanking clusters contribute 25 negatives each.
LabeledDataset gen_diagonal_blobs(std::uint64_t seed);

// 50 points on the unit circle and 50 on a concentric circle of radius 0.4,
// angles equally spaced, Gaussian noise added to each coordinate. The inner
// circle is the positive class.
LabeledDataset gen_concentric_circles(std::uint64_t seed, double noise = 0.05);

// Four Gaussian blobs at the corners of the [0, pi/2] square with
// XOR labeling: (0, pi/2) and (pi/2, 0) are positive.
LabeledDataset gen_square_blobs(std::uint64_t seed, double stddev = 0.05, int n_per_blob = 25);

// Complements every label; samples are untouched.
LabeledDataset swap_labels(LabeledDataset dataset);

// Per-feature affine map sending the feature minimum to 0 and maximum to
// pi/2. Exactly idempotent: a feature already spanning [0, pi/2] is left
// unchanged. Throws DegenerateInputError on a zero-range feature.
LabeledDataset minmax_scale(LabeledDataset dataset);

// CSV persistence: header "x0,x1,label", 17-significant-digit floats.
void write_csv(const LabeledDataset& dataset, std::ostream& out);
void write_csv_file(const LabeledDataset& dataset, const std::string& path);
LabeledDataset read_csv(std::istream& in);
LabeledDataset read_csv_file(const std::string& path);

} // namespace qneuron
