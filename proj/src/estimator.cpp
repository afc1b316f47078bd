#include "degseq/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "degseq/kahan.hpp"
#include "degseq/moments.hpp"
#include "degseq/threads.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace degseq {

namespace {

constexpr double kSeriesEps = 1e-30;

double dbl(const cpp_int& x) { return x.convert_to<double>(); }

}  // namespace

double log_phi(long long m1) {
    if (m1 <= 0) return 0.0;
    // (M1-1)!! = M1! / (2^(M1/2) (M1/2)!)
    const double m = static_cast<double>(m1);
    return std::lgamma(m + 1.0) - (m / 2.0) * std::log(2.0) - std::lgamma(m / 2.0 + 1.0);
}

double sum_log_factorials(const DegreeSequence& d) {
    const DegreeHistogram hist = histogram(d);
    Kahan acc;
    for (std::size_t a = 0; a < hist.size(); ++a)
        acc.add(static_cast<double>(hist.count[a]) *
                std::lgamma(static_cast<double>(hist.value[a]) + 1.0));
    return acc.value();
}

double sum_log1p_lambda(const DegreeSequence& d, int threads) {
    const DegreeHistogram hist = histogram(d);
    const double m1 = static_cast<double>(d.m1());
    const long long k = static_cast<long long>(hist.size());
    auto cell = [k](long long a, long long b) { return a * k - a * (a - 1) / 2 + (b - a); };
    std::vector<double> terms(static_cast<std::size_t>(k * (k + 1) / 2), 0.0);
    const int nt = resolve_threads(threads);
    (void)nt;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#endif
    for (long long a = 0; a < k; ++a) {
        const double va = static_cast<double>(hist.value[a]);
        const double ca = static_cast<double>(hist.count[a]);
        for (long long b = a; b < k; ++b) {
            const double vb = static_cast<double>(hist.value[b]);
            const double pairs = (a == b) ? ca * (ca - 1.0) / 2.0
                                          : ca * static_cast<double>(hist.count[b]);
            terms[static_cast<std::size_t>(cell(a, b))] = pairs * std::log1p(va * vb / m1);
        }
    }
    Kahan acc;
    for (double t : terms) acc.add(t);
    return acc.value();
}

double sum_log1p_lambda_naive(const DegreeSequence& d) {
    const double m1 = static_cast<double>(d.m1());
    Kahan acc;
    for (long long i = 0; i < d.n(); ++i)
        for (long long j = i + 1; j < d.n(); ++j)
            acc.add(std::log1p(static_cast<double>(d[i]) * static_cast<double>(d[j]) / m1));
    return acc.value();
}

double pair_series(Degree di, Degree dj, long long m1) {
    const double m1d = static_cast<double>(m1);
    double term = 1.0, sum = 1.0;
    const Degree mmax = std::min(di, dj);
    for (Degree m = 1; m <= mmax; ++m) {
        term *= static_cast<double>(di - m + 1) * static_cast<double>(dj - m + 1) /
                (static_cast<double>(m) * m1d);
        if (term == 0.0) break;
        sum += term;
        if (term < kSeriesEps * sum) break;
    }
    const double lam = static_cast<double>(di) * static_cast<double>(dj) / m1d;
    return sum / (1.0 + lam);
}

double loop_series(Degree d, long long m1) {
    const double m1d = static_cast<double>(m1);
    double term = 1.0, sum = 1.0;
    for (Degree m = 1; 2 * m <= d; ++m) {
        term *= static_cast<double>(d - 2 * m + 2) * static_cast<double>(d - 2 * m + 1) /
                (2.0 * m1d * static_cast<double>(m));
        if (term == 0.0) break;
        sum += term;
        if (term < kSeriesEps * sum) break;
    }
    return sum;
}

double log_s_direct(const DegreeSequence& d, int threads) {
    const DegreeHistogram hist = histogram(d);
    const long long m1 = d.m1();
    const long long k = static_cast<long long>(hist.size());
    auto cell = [k](long long a, long long b) { return a * k - a * (a - 1) / 2 + (b - a); };
    const std::size_t tri = static_cast<std::size_t>(k * (k + 1) / 2);
    std::vector<double> terms(tri + static_cast<std::size_t>(k), 0.0);
    const int nt = resolve_threads(threads);
    (void)nt;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nt)
#endif
    for (long long a = 0; a < k; ++a) {
        const double ca = static_cast<double>(hist.count[a]);
        for (long long b = a; b < k; ++b) {
            const double pairs = (a == b) ? ca * (ca - 1.0) / 2.0
                                          : ca * static_cast<double>(hist.count[b]);
            terms[static_cast<std::size_t>(cell(a, b))] =
                pairs * std::log(pair_series(hist.value[a], hist.value[b], m1));
        }
        terms[tri + static_cast<std::size_t>(a)] = ca * std::log(loop_series(hist.value[a], m1));
    }
    Kahan acc;
    for (double t : terms) acc.add(t);
    return acc.value();
}

double log_s_closed(const DegreeSequence& d, int threads) {
    const MomentProfile mom = moments(d, 3);
    const double m1 = dbl(mom.M[1]), m2 = dbl(mom.M[2]), m3 = dbl(mom.M[3]);
    return m1 / 2.0 - m2 / (2.0 * m1) + m3 / (3.0 * m1 * m1) - 0.75 -
           sum_log1p_lambda(d, threads);
}

double f_of_signature(const DegreeSequence& d, const SignatureMatrix& m) {
    validate_signature(m, d);
    const double m1 = static_cast<double>(d.m1());
    double f = 1.0;
    for (const auto& [pr, mult] : m.multis) {
        const double di = static_cast<double>(d[pr.first]);
        const double dj = static_cast<double>(d[pr.second]);
        double t = 1.0;
        for (long long r = 1; r <= mult; ++r)
            t *= (di - r + 1) * (dj - r + 1) / (static_cast<double>(r) * m1);
        f *= t / (1.0 + di * dj / m1);
    }
    for (const auto& [v, loops] : m.loops) {
        const double dv = static_cast<double>(d[v]);
        double t = 1.0;
        for (long long r = 1; r <= loops; ++r)
            t *= (dv - 2 * r + 2) * (dv - 2 * r + 1) / (2.0 * m1 * static_cast<double>(r));
        f *= t;
    }
    return f;
}

std::vector<double> pair_masses(Degree di, Degree dj, long long m1) {
    const double m1d = static_cast<double>(m1);
    const double lam = static_cast<double>(di) * static_cast<double>(dj) / m1d;
    std::vector<double> raw{1.0, lam};
    double term = lam;
    const Degree mmax = std::min(di, dj);
    for (Degree m = 2; m <= mmax; ++m) {
        term *= static_cast<double>(di - m + 1) * static_cast<double>(dj - m + 1) /
                (static_cast<double>(m) * m1d);
        if (term == 0.0) break;
        raw.push_back(term);
    }
    double total = 0.0;
    for (double x : raw) total += x;
    const double a = total / (1.0 + lam);  // == pair_series
    std::vector<double> masses(raw.size(), 0.0);
    masses[0] = 1.0 / a;
    for (std::size_t m = 2; m < raw.size(); ++m) masses[m] = raw[m] / (a * (1.0 + lam));
    return masses;
}

std::vector<double> loop_masses(Degree d, long long m1) {
    const double m1d = static_cast<double>(m1);
    std::vector<double> raw{1.0};
    double term = 1.0;
    for (Degree m = 1; 2 * m <= d; ++m) {
        term *= static_cast<double>(d - 2 * m + 2) * static_cast<double>(d - 2 * m + 1) /
                (2.0 * m1d * static_cast<double>(m));
        if (term == 0.0) break;
        raw.push_back(term);
    }
    double b = 0.0;
    for (double x : raw) b += x;
    std::vector<double> masses(raw.size(), 0.0);
    for (std::size_t m = 0; m < raw.size(); ++m) masses[m] = raw[m] / b;
    return masses;
}

LogEstimate estimate_log_g(const DegreeSequence& d, Method method, const MethodParams& params,
                           bool force, double slack, int threads) {
    LogEstimate est;
    est.method = method;
    est.hypotheses = method_hypotheses(d, method, params, slack);
    if (!est.hypotheses.all_ok && !force) {
        for (const auto& c : est.hypotheses.checks)
            if (c.fatal && !c.satisfied) throw HypothesisViolation(c.name);
        throw HypothesisViolation("method hypotheses");
    }

    const int kmax = method == Method::powerlaw ? 6 : 3;
    const MomentProfile mom = moments(d, kmax);
    const double m1 = dbl(mom.M[1]), m2 = dbl(mom.M[2]), m3 = dbl(mom.M[3]);

    est.breakdown.emplace_back("log[(M1-1)!!]", log_phi(d.m1()));
    est.breakdown.emplace_back("-sum log(d_i!)", -sum_log_factorials(d));
    switch (method) {
        case Method::general:
        case Method::m2:
        case Method::longtail:
            est.breakdown.emplace_back("-M1/2", -m1 / 2.0);
            est.breakdown.emplace_back("M2/(2 M1)", m2 / (2.0 * m1));
            est.breakdown.emplace_back("-M3/(3 M1^2)", -m3 / (3.0 * m1 * m1));
            est.breakdown.emplace_back("3/4", 0.75);
            est.breakdown.emplace_back("sum log(1+lambda)", sum_log1p_lambda(d, threads));
            break;
        case Method::bivalued:
            est.breakdown.emplace_back("-M1/2", -m1 / 2.0);
            est.breakdown.emplace_back("M2/(2 M1)", m2 / (2.0 * m1));
            est.breakdown.emplace_back("3/4", 0.75);
            est.breakdown.emplace_back("sum log(1+lambda)", sum_log1p_lambda(d, threads));
            break;
        case Method::powerlaw: {
            const double m4 = dbl(mom.M[4]), m6 = dbl(mom.M[6]);
            est.breakdown.emplace_back("-M2/(2 M1)", -m2 / (2.0 * m1));
            est.breakdown.emplace_back("-M2^2/(4 M1^2)", -m2 * m2 / (4.0 * m1 * m1));
            est.breakdown.emplace_back("M3^2/(6 M1^3)", m3 * m3 / (6.0 * std::pow(m1, 3)));
            est.breakdown.emplace_back("M4/(4 M1^2)", m4 / (4.0 * m1 * m1));
            est.breakdown.emplace_back("-M4^2/(8 M1^4)", -m4 * m4 / (8.0 * std::pow(m1, 4)));
            est.breakdown.emplace_back("-M6/(6 M1^3)", -m6 / (6.0 * std::pow(m1, 3)));
            break;
        }
    }
    Kahan acc;
    for (const auto& [name, v] : est.breakdown) acc.add(v);
    est.log_g = acc.value();
    est.xi = est.hypotheses.xi;
    est.sqrt_xi = std::sqrt(est.xi);
    return est;
}

}  // namespace degseq
