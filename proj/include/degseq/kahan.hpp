#pragma once

#include <cmath>

namespace degseq {

// Neumaier-compensated accumulator.  Used wherever a floating sum feeds a
// frozen tolerance or a determinism contract, so the result is insensitive
// to term-magnitude noise (the summation order itself is always fixed by the
// caller).
struct Kahan {
    double s = 0, c = 0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

}  // namespace degseq
