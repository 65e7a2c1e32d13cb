#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gamma_euler {

// All Euler characteristics in this library are exact integers; no floating
// point anywhere in the computation path.
using EulerValue = boost::multiprecision::cpp_int;

// base^exp for exp >= 0.
inline EulerValue pow_ev(const EulerValue& base, unsigned exp) {
    return boost::multiprecision::pow(base, exp);
}

inline EulerValue pow_ev(long long base, unsigned exp) {
    return boost::multiprecision::pow(EulerValue(base), exp);
}

// (-1)^d as a plain int, d >= 0.
inline int parity_sign(long long d) { return (d % 2 == 0) ? 1 : -1; }

// Exact division; every halving in the closed forms is an integer by
// construction, so a nonzero remainder means a transcription bug.
EulerValue exact_div(const EulerValue& num, const EulerValue& den);

}  // namespace gamma_euler
