#pragma once

#include <string>

namespace qneuron {

// 17 significant digits: enough for strtod to reproduce the exact double,
// so emitted CSV/JSON files round-trip bit-for-bit.
std::string format_double(double value);

} // namespace qneuron
