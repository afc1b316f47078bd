#pragma once

#include <array>
#include <cstdint>
#include <type_traits>
#include <vector>

#include "degseq/bigint.hpp"
#include "degseq/core.hpp"

namespace degseq {

// Distinct degree values in decreasing order with their multiplicities.
struct DegreeHistogram {
    std::vector<Degree> value;
    std::vector<long long> count;

    std::size_t size() const { return value.size(); }
};

DegreeHistogram histogram(const DegreeSequence& d);

inline constexpr int kMaxMomentOrder = 8;

// Exact falling-factorial moments M_k = sum_i [d_i]_k for k = 0..kmax
// (M_0 = n, M_1 = total degree).  M_6 at n ~ 1e6 with large degrees
// overflows 128-bit integers, hence cpp_int.
struct MomentProfile {
    long long n = 0;
    int kmax = 0;
    std::vector<cpp_int> M;  // index k, size kmax+1
    Degree delta = 0;        // max degree
    long long tau = 0;       // sum of the min(delta, n) largest degrees
    DegreeHistogram hist;
};

MomentProfile moments(const DegreeSequence& d, int kmax = 4);

// Sum of the min(max_degree, n) largest degrees.
long long tau(const DegreeSequence& d);

// Head/tail split at 0 <= h <= n: H_k = sum_{i < h} [d_i]_k over the h
// largest degrees, L_k = M_k - H_k, for k = 1..4.
struct SplitMoments {
    long long h = 0;
    std::array<cpp_int, 5> H{};  // index k = 1..4
    std::array<cpp_int, 5> L{};
};

SplitMoments split(const DegreeSequence& d, long long h);

// lambda_{i,j} = d_i d_j / M_1 for i != j (0-based positions in sorted order).
cpp_rational lambda(const DegreeSequence& d, long long i, long long j);

// Inner-sum range for the two triple-sum functionals: the literal reading has
// w running over all vertices including i and j; strict mode excludes them.
enum class WRange { literal, strict };

// U_1..U_7 in result[1..7] (result[0] unused).  The exact path accumulates
// integer numerators over fixed powers of M_1 (meant for n <= ~1e4); the
// double path uses compensated summation and works at any n.
std::array<double, 8> u_functionals_double(const DegreeSequence& d, WRange w = WRange::literal);
std::array<cpp_rational, 8> u_functionals_exact(const DegreeSequence& d,
                                                WRange w = WRange::literal);

template <class Real>
std::array<Real, 8> u_functionals(const DegreeSequence& d, WRange w = WRange::literal) {
    if constexpr (std::is_same_v<Real, double>)
        return u_functionals_double(d, w);
    else
        return u_functionals_exact(d, w);
}

// O(n^2) / O(n^3) direct evaluations used as references in tests and in the
// kernel benchmark; identical formulas, no histogram grouping.
std::array<double, 8> u_functionals_naive(const DegreeSequence& d, WRange w = WRange::literal);

}  // namespace degseq
