#include "degseq/oracle.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "degseq/threads.hpp"

namespace degseq {

cpp_int phi_exact(long long m1) {
    if (m1 % 2 != 0) throw std::invalid_argument("phi_exact needs even m1");
    cpp_int r = 1;
    for (long long k = 1; k <= m1 / 2; ++k) r *= 2 * k - 1;
    return r;
}

cpp_int factorial_product(const DegreeSequence& d) {
    cpp_int r = 1;
    for (long long i = 0; i < d.n(); ++i)
        for (Degree t = 2; t <= d[i]; ++t) r *= t;
    return r;
}

namespace {

void check_oracle_scale(const DegreeSequence& d) {
    if (d.m1() > kMaxOraclePoints) throw OracleTooLarge(d.m1(), kMaxOraclePoints);
}

template <class Visit>
void enumerate_rec(Pairing& p, int from, Visit& visit) {
    const int m1 = static_cast<int>(p.points());
    int first = from;
    while (first < m1 && p.mate[first] != -1) ++first;
    if (first == m1) {
        visit(p);
        return;
    }
    for (int q = first + 1; q < m1; ++q) {
        if (p.mate[q] != -1) continue;
        p.mate[first] = q;
        p.mate[q] = first;
        enumerate_rec(p, first + 1, visit);
        p.mate[first] = -1;
        p.mate[q] = -1;
    }
}

}  // namespace

void enumerate_pairings(const DegreeSequence& d,
                        const std::function<void(const Pairing&)>& visit) {
    check_oracle_scale(d);
    Pairing p = pairing_layout(d);
    enumerate_rec(p, 0, visit);
}

SignatureCensus census_serial(const DegreeSequence& d) {
    check_oracle_scale(d);
    SignatureCensus census;
    Pairing p = pairing_layout(d);
    auto visit = [&census](const Pairing& q) { ++census[signature_of(q)]; };
    enumerate_rec(p, 0, visit);
    return census;
}

SignatureCensus census_parallel(const DegreeSequence& d, int threads) {
    check_oracle_scale(d);
    const int m1 = static_cast<int>(d.m1());
    std::vector<SignatureCensus> branch(m1 > 0 ? m1 - 1 : 0);
    const int nt = resolve_threads(threads);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#endif
    for (int q = 1; q < m1; ++q) {
        Pairing p = pairing_layout(d);
        p.mate[0] = q;
        p.mate[q] = 0;
        auto visit = [&branch, q](const Pairing& r) { ++branch[q - 1][signature_of(r)]; };
        enumerate_rec(p, 1, visit);
    }
    (void)nt;
    SignatureCensus census;  // merge in fixed ascending-branch order
    for (const auto& b : branch)
        for (const auto& [sig, count] : b) census[sig] += count;
    return census;
}

OracleReport oracle_report(const DegreeSequence& d, bool with_census) {
    check_oracle_scale(d);
    OracleReport rep;
    rep.m1 = d.m1();
    rep.phi = phi_exact(d.m1());
    cpp_int simple = 0;
    SignatureCensus census;
    Pairing p = pairing_layout(d);
    auto visit = [&](const Pairing& q) {
        if (is_simple(q)) ++simple;
        if (with_census) ++census[signature_of(q)];
    };
    enumerate_rec(p, 0, visit);
    rep.simple_pairings = simple;
    cpp_int fact = factorial_product(d);
    if (simple % fact != 0)
        throw std::logic_error("simple pairing count not divisible by prod d_i!");
    rep.g = simple / fact;
    rep.p_simple = cpp_rational(simple, rep.phi);
    if (with_census) rep.census = std::move(census);
    return rep;
}

cpp_rational exact_expectation(const DegreeSequence& d,
                               const std::function<long long(const Pairing&)>& f) {
    check_oracle_scale(d);
    cpp_int sum = 0;
    Pairing p = pairing_layout(d);
    auto visit = [&](const Pairing& q) { sum += f(q); };
    enumerate_rec(p, 0, visit);
    return cpp_rational(sum, phi_exact(d.m1()));
}

EdgeMomentSums edge_moment_sums(const DegreeSequence& d) {
    check_oracle_scale(d);
    const int n = static_cast<int>(d.n());
    EdgeMomentSums sums;
    sums.phi = phi_exact(d.m1());
    sums.y_sum.assign(n, std::vector<long long>(n, 0));
    sums.y2_sum.assign(n, std::vector<long long>(n, 0));

    Pairing p = pairing_layout(d);
    std::array<std::pair<int, int>, kMaxOraclePoints / 2> edges{};
    auto visit = [&](const Pairing& q) {
        int ec = 0;
        for (std::int32_t pt = 0; pt < q.points(); ++pt) {
            if (q.mate[pt] <= pt) continue;
            int u = q.bin_of[pt], v = q.bin_of[q.mate[pt]];
            if (u == v) continue;  // Y_{u,v} counts non-loop pairs only
            if (u > v) std::swap(u, v);
            edges[ec++] = {u, v};
            ++sums.y_sum[u][v];
        }
        std::sort(edges.begin(), edges.begin() + ec);
        for (int a = 0; a < ec;) {
            int b = a;
            while (b < ec && edges[b] == edges[a]) ++b;
            long long y = b - a;
            if (y >= 2) sums.y2_sum[edges[a].first][edges[a].second] += y * (y - 1);
            a = b;
        }
    };
    enumerate_rec(p, 0, visit);
    return sums;
}

namespace {

cpp_int place_vertex(std::vector<Degree>& r, int u) {
    const int n = static_cast<int>(r.size());
    while (u < n && r[u] == 0) ++u;
    if (u == n) return 1;

    std::vector<int> targets;
    for (int w = u + 1; w < n; ++w)
        if (r[w] > 0) targets.push_back(w);
    const long long need = r[u];
    if (need > static_cast<long long>(targets.size())) return 0;

    cpp_int total = 0;
    // Choose `need` distinct later vertices for u's remaining edges; earlier
    // vertices are already fully wired, so each graph is built exactly once.
    std::vector<int> chosen;
    std::function<void(std::size_t, long long)> comb = [&](std::size_t idx, long long left) {
        if (left == 0) {
            r[u] = 0;
            total += place_vertex(r, u + 1);
            r[u] = need;
            return;
        }
        if (targets.size() - idx < static_cast<std::size_t>(left)) return;
        int w = targets[idx];
        --r[w];
        comb(idx + 1, left - 1);
        ++r[w];
        comb(idx + 1, left);
    };
    comb(0, need);
    return total;
}

}  // namespace

cpp_int count_simple_graphs(const DegreeSequence& d) {
    std::vector<Degree> r = d.degrees();
    return place_vertex(r, 0);
}

}  // namespace degseq
