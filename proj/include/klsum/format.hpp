#pragma once

#include <cstdio>
#include <string>

namespace klsum {

// 17 significant digits: round-trip safe for double, '.' decimal point
// regardless of locale (snprintf with the C locale's %g).
inline std::string num17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace klsum
