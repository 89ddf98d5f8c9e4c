#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kronspec {

// Exact arithmetic: factorials and class sums exceed 64 bits around k = 21,
// and several identities are asserted with zero tolerance.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int int_pow(const Int& base, int exp) {
    Int r = 1;
    Int b = base;
    for (int e = exp; e > 0; e >>= 1) {
        if (e & 1) r *= b;
        b *= b;
    }
    return r;
}

inline double to_double(const Int& v) { return v.convert_to<double>(); }
inline double to_double(const Rat& v) { return v.convert_to<double>(); }

}  // namespace kronspec
