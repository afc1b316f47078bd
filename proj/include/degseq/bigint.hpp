#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace degseq {

using cpp_int = boost::multiprecision::cpp_int;
using cpp_rational = boost::multiprecision::cpp_rational;

// Falling factorial [x]_k = x(x-1)...(x-k+1), with the counting convention
// [x]_k = 0 for x < k (selections of k distinct items from x).  The bound
// formulas use expressions like [d-2]_2 where d-2 may be negative; those
// terms count point selections and must vanish, not go negative.
template <class T>
T falling(long long x, int k) {
    if (x < k) return T(0);
    T r(1);
    for (int t = 0; t < k; ++t) r *= T(x - t);
    return r;
}

inline long long falling_ll(long long x, int k) {
    if (x < k) return 0;
    long long r = 1;
    for (int t = 0; t < k; ++t) r *= x - t;
    return r;
}

}  // namespace degseq
