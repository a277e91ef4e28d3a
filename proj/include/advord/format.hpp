#pragma once

// Numeric-to-text helpers shared by the grid dump and the output writers.

#include <cstdio>
#include <string>

namespace advord::detail {

// Shortest-of-17-significant-digits form; round-trips to the same double.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

}  // namespace advord::detail
