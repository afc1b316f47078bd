// Compares every parallel kernel against its serial reference: wall times,
// speedup, and an equality column (integer results bit-exact, floating
// results identical across thread counts by the determinism contract).
// Exits nonzero if any comparison fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "degseq/core.hpp"
#include "degseq/estimator.hpp"
#include "degseq/moments.hpp"
#include "degseq/oracle.hpp"
#include "degseq/pairing_model.hpp"
#include "degseq/seqgen.hpp"
#include "degseq/threads.hpp"

using namespace degseq;

namespace {

int failures = 0;

template <class F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool match) {
    if (!match) ++failures;
    std::printf("%-44s %10.2f %10.2f %8.2fx   %s\n", name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, match ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
    const int threads = resolve_threads(0);
    std::printf("worker threads: %d\n", threads);
    std::printf("%-44s %10s %10s %9s   %s\n", "kernel", "serial/ms", "par/ms", "speedup",
                "results");

    {
        FamilySpec spec;
        spec.kind = FamilyKind::powerlaw;
        spec.n = 200000;
        spec.gamma = 2.2;
        spec.c = 1.0;
        const DegreeSequence d = generate(spec).d;

        double a = 0, b = 0;
        const double t1 = time_ms([&] { a = sum_log1p_lambda(d, 1); });
        const double tp = time_ms([&] { b = sum_log1p_lambda(d, threads); });
        row("sum log(1+lambda) grouped, 1 vs " + std::to_string(threads) + " threads", t1, tp,
            a == b);

        // The pairwise reference is O(n^2); compare it on a smaller instance.
        FamilySpec small = spec;
        small.n = 20000;
        const DegreeSequence ds = generate(small).d;
        double naive = 0, grouped = 0;
        const double t_naive = time_ms([&] { naive = sum_log1p_lambda_naive(ds); });
        const double t_grp = time_ms([&] { grouped = sum_log1p_lambda(ds, 1); });
        row("  vs pairwise reference, n=20000 (1e-9 rel)", t_naive, t_grp,
            std::abs(naive - grouped) <= 1e-9 * std::max(1.0, std::abs(naive)));

        double s1 = 0, sp = 0;
        const double u1 = time_ms([&] { s1 = log_s_direct(d, 1); });
        const double up = time_ms([&] { sp = log_s_direct(d, threads); });
        row("heavy-entry log product S, 1 vs " + std::to_string(threads), u1, up, s1 == sp);
    }

    {
        const DegreeSequence d(std::vector<Degree>(1000, 3));
        const long long samples = 20000;
        MonteCarloResult m1, mp;
        const double t1 = time_ms([&] { m1 = estimate_p_simple(d, samples, 42, 1); });
        const double tp = time_ms([&] { mp = estimate_p_simple(d, samples, 42, threads); });
        row("Monte Carlo p(simple), 1 vs " + std::to_string(threads) + " threads", t1, tp,
            m1.successes == mp.successes);

        std::map<SignatureMatrix, long long> c1, cp;
        const double s1 = time_ms([&] { c1 = sample_signature_census(d, 5000, 42, 1); });
        const double sp = time_ms([&] { cp = sample_signature_census(d, 5000, 42, threads); });
        row("sampled signature census, 1 vs " + std::to_string(threads), s1, sp, c1 == cp);
    }

    {
        const DegreeSequence d({3, 3, 2, 2, 2, 1, 1, 1, 1});  // M1 = 16: largest oracle size
        SignatureCensus c1, cp;
        const double t1 = time_ms([&] { c1 = census_serial(d); });
        const double tp = time_ms([&] { cp = census_parallel(d, threads); });
        row("exhaustive census, serial vs parallel", t1, tp, c1 == cp);
    }

    if (failures) std::printf("%d kernel comparison(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
