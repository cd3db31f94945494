#include "qcsurf/textio.hpp"

#include <algorithm>
#include <cstdio>

namespace qcsurf {

std::string format_fixed(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
    std::string s(buf);
    // "-0.000" compares equal to zero but breaks byte-level determinism.
    if (s[0] == '-' &&
        std::all_of(s.begin() + 1, s.end(), [](char c) { return c == '0' || c == '.'; }))
        s.erase(s.begin());
    return s;
}

}  // namespace qcsurf
