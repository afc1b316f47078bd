#include "degseq/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "degseq/kahan.hpp"

namespace degseq {

namespace {

inline long long pos(long long x) { return x > 0 ? x : 0; }

}  // namespace

DegreeHistogram histogram(const DegreeSequence& d) {
    DegreeHistogram h;
    long long i = 0;
    while (i < d.n()) {
        long long j = i;
        while (j < d.n() && d[j] == d[i]) ++j;
        h.value.push_back(d[i]);
        h.count.push_back(j - i);
        i = j;
    }
    return h;
}

MomentProfile moments(const DegreeSequence& d, int kmax) {
    if (kmax < 1 || kmax > kMaxMomentOrder)
        throw std::invalid_argument("kmax must be in 1..8");
    MomentProfile p;
    p.n = d.n();
    p.kmax = kmax;
    p.hist = histogram(d);
    p.delta = d.max_degree();
    p.tau = tau(d);
    p.M.assign(kmax + 1, cpp_int(0));
    p.M[0] = p.n;
    for (std::size_t a = 0; a < p.hist.size(); ++a)
        for (int k = 1; k <= kmax; ++k)
            p.M[k] += cpp_int(p.hist.count[a]) * falling<cpp_int>(p.hist.value[a], k);
    return p;
}

long long tau(const DegreeSequence& d) {
    long long take = std::min<long long>(d.max_degree(), d.n());
    long long s = 0;
    for (long long i = 0; i < take; ++i) s += d[i];
    return s;
}

SplitMoments split(const DegreeSequence& d, long long h) {
    if (h < 0 || h > d.n()) throw std::invalid_argument("split point h out of range");
    SplitMoments s;
    s.h = h;
    for (long long i = 0; i < h; ++i)
        for (int k = 1; k <= 4; ++k) s.H[k] += falling<cpp_int>(d[i], k);
    for (int k = 1; k <= 4; ++k) {
        cpp_int mk = 0;
        for (long long i = 0; i < d.n(); ++i) mk += falling<cpp_int>(d[i], k);
        s.L[k] = mk - s.H[k];
    }
    return s;
}

cpp_rational lambda(const DegreeSequence& d, long long i, long long j) {
    if (i < 0 || j < 0 || i >= d.n() || j >= d.n()) throw InvalidInput("lambda index out of range");
    if (i == j) throw InvalidInput("lambda requires i != j");
    return cpp_rational(cpp_int(d[i]) * d[j], cpp_int(d.m1()));
}

// ---------------------------------------------------------------------------
// U functionals.  Both paths group the pairwise sums by distinct degree value:
// each (value_a, value_b) cell contributes its term times the number of
// ordered (or unordered) vertex pairs in that cell.

std::array<double, 8> u_functionals_double(const DegreeSequence& d, WRange w) {
    if (d.m1() == 0) throw DivisionByZero("u_functionals");
    const DegreeHistogram h = histogram(d);
    const std::size_t k = h.size();
    const double m1 = static_cast<double>(d.m1());

    auto ff = [](long long x, int t) { return static_cast<double>(falling_ll(x, t)); };

    // Inner w-sums depend only on d_i's value; precompute per distinct value.
    std::vector<double> h3(k, 0.0), h5(k, 0.0);
    for (std::size_t a = 0; a < k; ++a) {
        const long long va = h.value[a];
        const double fa = ff(va - 2, 2);
        Kahan s3, s5;
        for (std::size_t c = 0; c < k; ++c) {
            const long long vw = h.value[c];
            const double cc = static_cast<double>(h.count[c]);
            s3.add(cc * std::min(fa * ff(vw, 2) / (m1 * m1), 1.0) * static_cast<double>(pos(vw - 2)));
            s5.add(cc * std::min(fa * ff(vw, 2) / (m1 * m1),
                                 static_cast<double>(pos(va - 2)) * static_cast<double>(vw) / m1));
        }
        h3[a] = s3.value();
        h5[a] = s5.value();
    }
    auto t3 = [&](std::size_t a, long long vw) {
        return std::min(ff(h.value[a] - 2, 2) * ff(vw, 2) / (m1 * m1), 1.0) *
               static_cast<double>(pos(vw - 2));
    };
    auto t5 = [&](std::size_t a, long long vw) {
        return std::min(ff(h.value[a] - 2, 2) * ff(vw, 2) / (m1 * m1),
                        static_cast<double>(pos(h.value[a] - 2)) * static_cast<double>(vw) / m1);
    };

    Kahan u1, u2, u3, u4, u5, u6, u7;
    for (std::size_t a = 0; a < k; ++a) {
        const long long va = h.value[a];
        const double ca = static_cast<double>(h.count[a]);
        u1.add(ca * static_cast<double>(pos(va - 2)) * std::min(ff(va, 2) / m1, 1.0));
        for (std::size_t b = 0; b < k; ++b) {
            const long long vb = h.value[b];
            const double ordered =
                (a == b) ? ca * (ca - 1) : ca * static_cast<double>(h.count[b]);
            if (ordered == 0) continue;
            const double lam = static_cast<double>(va) * static_cast<double>(vb) / m1;
            const double amin = std::min(ff(va, 2) * ff(vb, 2) / (m1 * m1), lam);
            if (b >= a) {  // unordered pairs for U2
                const double cells =
                    (a == b) ? ca * (ca - 1) / 2 : ca * static_cast<double>(h.count[b]);
                u2.add(cells * amin);
            }
            double inner3 = h3[a], inner5 = h5[a];
            if (w == WRange::strict) {
                inner3 -= t3(a, va) + t3(a, vb);
                inner5 -= t5(a, va) + t5(a, vb);
            }
            u3.add(ordered * amin * inner3);
            u4.add(ordered * std::min(ff(va, 3) * ff(vb, 2) / (m1 * m1),
                                      ff(va, 2) * static_cast<double>(vb) / m1));
            u5.add(ordered *
                   std::min(static_cast<double>(va) * ff(vb, 2) / (m1 * m1),
                            static_cast<double>(vb) / m1) *
                   inner5);
            u6.add(ordered * std::min(ff(va, 3) * ff(vb, 3) / (m1 * m1),
                                      static_cast<double>(va) * static_cast<double>(vb)));
            u7.add(ordered * (ff(va, 2) / m1) *
                   std::min(static_cast<double>(pos(va - 2)) * ff(vb, 2) / (m1 * m1),
                            static_cast<double>(vb) / m1));
        }
    }
    return {0.0,        u1.value(), u2.value(), u3.value(),
            u4.value(), u5.value(), u6.value(), u7.value()};
}

std::array<cpp_rational, 8> u_functionals_exact(const DegreeSequence& d, WRange w) {
    if (d.m1() == 0) throw DivisionByZero("u_functionals");
    const DegreeHistogram h = histogram(d);
    const std::size_t k = h.size();
    const cpp_int m1 = d.m1();
    const cpp_int m1sq = m1 * m1;

    auto ff = [](long long x, int t) { return falling<cpp_int>(x, t); };

    // Numerators over fixed denominators: U1*M1, U2*M1^2, U3*M1^4, U4*M1^2,
    // U5*M1^4, U6*M1^2, U7*M1^3.  Integer arithmetic throughout, one exact
    // division at the end.
    std::vector<cpp_int> h3(k, cpp_int(0)), h5(k, cpp_int(0));  // scaled by M1^2
    for (std::size_t a = 0; a < k; ++a) {
        const long long va = h.value[a];
        const cpp_int fa = ff(va - 2, 2);
        for (std::size_t c = 0; c < k; ++c) {
            const long long vw = h.value[c];
            h3[a] += h.count[c] * std::min(fa * ff(vw, 2), m1sq) * pos(vw - 2);
            h5[a] += h.count[c] * std::min(fa * ff(vw, 2), cpp_int(pos(va - 2)) * vw * m1);
        }
    }
    auto t3 = [&](std::size_t a, long long vw) -> cpp_int {
        return std::min(ff(h.value[a] - 2, 2) * ff(vw, 2), m1sq) * pos(vw - 2);
    };
    auto t5 = [&](std::size_t a, long long vw) -> cpp_int {
        return std::min(ff(h.value[a] - 2, 2) * ff(vw, 2),
                        cpp_int(pos(h.value[a] - 2)) * vw * m1);
    };

    cpp_int u1 = 0, u2 = 0, u3 = 0, u4 = 0, u5 = 0, u6 = 0, u7 = 0;
    for (std::size_t a = 0; a < k; ++a) {
        const long long va = h.value[a];
        const cpp_int ca = h.count[a];
        u1 += ca * pos(va - 2) * std::min(ff(va, 2), m1);
        for (std::size_t b = 0; b < k; ++b) {
            const long long vb = h.value[b];
            const cpp_int ordered = (a == b) ? cpp_int(ca * (ca - 1)) : cpp_int(ca * h.count[b]);
            if (ordered == 0) continue;  // U2 cell count is then also zero
            const cpp_int amin = std::min(ff(va, 2) * ff(vb, 2), cpp_int(va) * vb * m1);
            if (b >= a) {
                const cpp_int cells = (a == b) ? cpp_int(ca * (ca - 1) / 2) : cpp_int(ca * h.count[b]);
                u2 += cells * amin;
            }
            cpp_int inner3 = h3[a], inner5 = h5[a];
            if (w == WRange::strict) {
                inner3 -= t3(a, va) + t3(a, vb);
                inner5 -= t5(a, va) + t5(a, vb);
            }
            u3 += ordered * amin * inner3;
            u4 += ordered * std::min(ff(va, 3) * ff(vb, 2), ff(va, 2) * vb * m1);
            u5 += ordered * std::min(cpp_int(va) * ff(vb, 2), cpp_int(vb) * m1) * inner5;
            u6 += ordered * std::min(ff(va, 3) * ff(vb, 3), cpp_int(va) * vb * m1sq);
            u7 += ordered * ff(va, 2) *
                  std::min(cpp_int(pos(va - 2)) * ff(vb, 2), cpp_int(vb) * m1);
        }
    }
    const cpp_int m1p3 = m1sq * m1, m1p4 = m1sq * m1sq;
    return {cpp_rational(0),        cpp_rational(u1, m1),   cpp_rational(u2, m1sq),
            cpp_rational(u3, m1p4), cpp_rational(u4, m1sq), cpp_rational(u5, m1p4),
            cpp_rational(u6, m1sq), cpp_rational(u7, m1p3)};
}

std::array<double, 8> u_functionals_naive(const DegreeSequence& d, WRange w) {
    if (d.m1() == 0) throw DivisionByZero("u_functionals");
    const long long n = d.n();
    const double m1 = static_cast<double>(d.m1());
    auto ff = [](long long x, int t) { return static_cast<double>(falling_ll(x, t)); };

    std::array<double, 8> u{};
    for (long long v = 0; v < n; ++v)
        u[1] += static_cast<double>(pos(d[v] - 2)) * std::min(ff(d[v], 2) / m1, 1.0);
    for (long long i = 0; i < n; ++i) {
        for (long long j = 0; j < n; ++j) {
            if (i == j) continue;
            const double lam = static_cast<double>(d[i]) * static_cast<double>(d[j]) / m1;
            const double amin = std::min(ff(d[i], 2) * ff(d[j], 2) / (m1 * m1), lam);
            if (i < j) u[2] += amin;
            u[4] += std::min(ff(d[i], 3) * ff(d[j], 2) / (m1 * m1),
                             ff(d[i], 2) * static_cast<double>(d[j]) / m1);
            u[6] += std::min(ff(d[i], 3) * ff(d[j], 3) / (m1 * m1),
                             static_cast<double>(d[i]) * static_cast<double>(d[j]));
            u[7] += (ff(d[i], 2) / m1) *
                    std::min(static_cast<double>(pos(d[i] - 2)) * ff(d[j], 2) / (m1 * m1),
                             static_cast<double>(d[j]) / m1);
            double inner3 = 0, inner5 = 0;
            for (long long t = 0; t < n; ++t) {
                if (w == WRange::strict && (t == i || t == j)) continue;
                inner3 += std::min(ff(d[i] - 2, 2) * ff(d[t], 2) / (m1 * m1), 1.0) *
                          static_cast<double>(pos(d[t] - 2));
                inner5 += std::min(ff(d[i] - 2, 2) * ff(d[t], 2) / (m1 * m1),
                                   static_cast<double>(pos(d[i] - 2)) *
                                       static_cast<double>(d[t]) / m1);
            }
            u[3] += amin * inner3;
            u[5] += std::min(static_cast<double>(d[i]) * ff(d[j], 2) / (m1 * m1),
                             static_cast<double>(d[j]) / m1) *
                    inner5;
        }
    }
    return u;
}

}  // namespace degseq
