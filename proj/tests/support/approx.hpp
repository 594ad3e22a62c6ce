#pragma once

#include <cmath>
#include <cstdio>

#include <doctest.h>

// Absolute-tolerance comparison; doctest's Approx bound scales with the
// operands, which is useless for values near zero.
struct Absolute {
    double value;
    double margin;
};

inline Absolute absolute(double value, double margin) { return {value, margin}; }

inline bool operator==(double lhs, const Absolute& rhs) {
    return std::fabs(lhs - rhs.value) <= rhs.margin;
}
inline bool operator==(const Absolute& lhs, double rhs) { return rhs == lhs; }
inline bool operator!=(double lhs, const Absolute& rhs) { return !(lhs == rhs); }
inline bool operator!=(const Absolute& lhs, double rhs) { return !(rhs == lhs); }

inline doctest::String toString(const Absolute& a) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.17g +/- %g", a.value, a.margin);
    return buf;
}
