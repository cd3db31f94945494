#pragma once

#include <string>

namespace qcsurf {

/// Fixed-point decimal formatting, locale-independent, with negative zero
/// normalized to plain zero so outputs are byte-stable.
std::string format_fixed(double value, int precision);

}  // namespace qcsurf
