#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace serreq {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Integer ipow(Integer base, int exp) {
    Integer r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

} // namespace serreq
