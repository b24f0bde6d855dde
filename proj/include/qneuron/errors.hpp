#pragma once

#include <stdexcept>

namespace qneuron {

// Raised when a dataset cannot support the requested computation, e.g. a
// single-class label vector or a zero-range feature.
class DegenerateInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised on file read/write failures.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qneuron
