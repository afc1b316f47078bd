// Acceptance battery: one criterion per invocation (argv[1] = 1..8), one
// summary line on stdout, exit 0 on pass and 1 on fail.  Tolerances are
// pinned here, in code, next to the checks that use them.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "degseq/bigint.hpp"
#include "degseq/core.hpp"
#include "degseq/errbounds.hpp"
#include "degseq/estimator.hpp"
#include "degseq/moments.hpp"
#include "degseq/oracle.hpp"
#include "degseq/pairing_model.hpp"
#include "degseq/rng.hpp"
#include "degseq/seqgen.hpp"
#include "degseq/switching.hpp"
#include "degseq/verify.hpp"

using namespace degseq;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
}

std::string seq_label(const DegreeSequence& d) {
    std::ostringstream os;
    os << "(";
    for (long long i = 0; i < d.n(); ++i) os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

// 1. Exhaustive pairing-census identities for every sequence with n <= 6 and
//    M1 <= 14: census totals, the simple cell, the graph-count quotient and
//    the simple-graph probability must match the independent graph oracle
//    exactly (integer arithmetic, zero tolerance).
Outcome criterion1() {
    long long sequences = 0, checks = 0;
    std::string first_bad;
    for (const auto& d : all_sequences_up_to(14)) {
        if (d.n() > 6) continue;
        ++sequences;
        auto rep = oracle_report(d, /*with_census=*/true);
        const cpp_int phi = phi_exact(d.m1());
        cpp_int total = 0;
        for (const auto& [sig, cnt] : *rep.census) total += cnt;
        const SignatureMatrix empty;
        const long long simple_cell =
            rep.census->count(empty) ? rep.census->at(empty) : 0;
        const cpp_int g_independent = count_simple_graphs(d);

        const bool here = rep.phi == phi && total == phi &&
                          cpp_int(simple_cell) == rep.simple_pairings &&
                          rep.g == g_independent &&
                          rep.simple_pairings == g_independent * factorial_product(d) &&
                          rep.p_simple == cpp_rational(rep.simple_pairings, phi);
        checks += 6;
        if (!here && first_bad.empty()) first_bad = seq_label(d);
    }
    Outcome o;
    o.pass = first_bad.empty();
    std::ostringstream os;
    os << sequences << " sequences, " << checks << " exact identities";
    if (!o.pass) os << "; first failure at " << first_bad;
    o.detail = os.str();
    return o;
}

// 2. Exact single- and paired-edge moments for every sequence with M1 <= 12
//    and every vertex pair: E[Y] = d_u d_v / (M1 - 1) and
//    E[Y(Y-1)] = [d_u]_2 [d_v]_2 / ((M1 - 1)(M1 - 3)), zero tolerance.
Outcome criterion2() {
    long long sequences = 0, pairs = 0;
    std::string first_bad;
    for (const auto& d : all_sequences_up_to(12)) {
        if (d.n() < 2) continue;
        ++sequences;
        auto ems = edge_moment_sums(d);
        const long long m1 = d.m1();
        for (int u = 0; u < d.n(); ++u)
            for (int v = u + 1; v < d.n(); ++v) {
                ++pairs;
                const cpp_int du = d[u], dv = d[v];
                const bool y_ok = cpp_int(ems.y_sum[u][v]) * (m1 - 1) == du * dv * ems.phi;
                const bool y2_ok =
                    cpp_int(ems.y2_sum[u][v]) * ((m1 - 1) * (m1 - 3)) ==
                    du * (du - 1) * dv * (dv - 1) * ems.phi;
                if (!(y_ok && y2_ok) && first_bad.empty())
                    first_bad = seq_label(d) + " pair (" + std::to_string(u + 1) + "," +
                                std::to_string(v + 1) + ")";
            }
    }
    Outcome o;
    o.pass = first_bad.empty();
    std::ostringstream os;
    os << sequences << " sequences, " << pairs << " vertex pairs, exact";
    if (!o.pass) os << "; first failure at " << first_bad;
    o.detail = os.str();
    return o;
}

// 3. Simulation vs. formula on the 3-regular sequence with n = 1000:
//    2*10^5 pairing samples at a fixed seed; the implied simple-graph
//    probability exp(log_g + sum log d_i! - log |Phi|) must sit within 3
//    Wilson half-widths of the empirical rate, and both must be within 5%
//    of e^-2.
Outcome criterion3() {
    FamilySpec spec;
    spec.kind = FamilyKind::regular;
    spec.degree = 3;
    spec.n = 1000;
    DegreeSequence d = generate(spec).d;

    auto mc = estimate_p_simple(d, 200000, /*seed=*/424242);
    auto est = estimate_log_g(d, Method::general);
    const double implied_log_p =
        est.log_g + sum_log_factorials(d) - log_phi(d.m1());
    const double p_formula = std::exp(implied_log_p);
    const double half = (mc.wilson_high - mc.wilson_low) / 2.0;
    const double anchor = std::exp(-2.0);

    const bool agree = std::abs(mc.p_hat - p_formula) <= 3.0 * half;
    const bool hat_near = std::abs(mc.p_hat - anchor) <= 0.05 * anchor;
    const bool formula_near = std::abs(p_formula - anchor) <= 0.05 * anchor;

    Outcome o;
    o.pass = agree && hat_near && formula_near;
    o.detail = "p_hat=" + fmt(mc.p_hat) + " formula=" + fmt(p_formula) +
               " |diff|=" + fmt(std::abs(mc.p_hat - p_formula)) +
               " 3*half=" + fmt(3.0 * half) + " anchor=" + fmt(anchor);
    return o;
}

// 4. Series vs. closed form of the heavy-entry normalizer on 3-regular
//    ladders n in {250, 500, 1000, 2000}: the gap must be finite, strictly
//    decreasing, and at most 10 * (xi + 1/M1) at every rung.
Outcome criterion4() {
    std::vector<long long> ns = {250, 500, 1000, 2000};
    std::vector<double> gaps;
    bool bounded = true;
    for (long long n : ns) {
        FamilySpec spec;
        spec.kind = FamilyKind::regular;
        spec.degree = 3;
        spec.n = n;
        DegreeSequence d = generate(spec).d;
        const double gap = std::abs(log_s_direct(d) - log_s_closed(d));
        const double xi = estimate_log_g(d, Method::general).xi;
        const double budget = 10.0 * (xi + 1.0 / static_cast<double>(d.m1()));
        if (!std::isfinite(gap) || gap > budget) bounded = false;
        gaps.push_back(gap);
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < gaps.size(); ++i)
        if (!(gaps[i] < gaps[i - 1])) decreasing = false;

    Outcome o;
    o.pass = bounded && decreasing;
    std::ostringstream os;
    os << "gaps";
    for (double g : gaps) os << " " << fmt(g);
    os << (decreasing ? " (decreasing)" : " (NOT decreasing)");
    if (!bounded) os << "; budget exceeded";
    o.detail = os.str();
    return o;
}

// 5. Switching suite: exhaustive count-symmetry/round-trip battery for
//    M1 <= 10, the exact class ratio rho_2 = 1/(2k(k-1)) on (2,2,1^{2k}) for
//    k = 2,3, and decreasing relative error of the leading-order prediction
//    for k = 2..6.
Outcome criterion5() {
    auto lines = verify_switching(10);
    long long bad = 0;
    std::string first_bad;
    for (const auto& l : lines)
        if (!l.ok) {
            ++bad;
            if (first_bad.empty()) first_bad = l.name + " " + l.detail;
        }

    bool exact_ok = true;
    for (long long k : {2LL, 3LL}) {
        std::vector<Degree> v = {2, 2};
        v.insert(v.end(), static_cast<std::size_t>(2 * k), 1);
        auto r = census_ratio(DegreeSequence(v), 0, 1, 2);
        if (cpp_rational(r.c_m, r.c_0) != cpp_rational(1, 2 * k * (k - 1)))
            exact_ok = false;
        if (r.c_star != r.c_0 + r.c_1) exact_ok = false;
    }

    std::vector<double> errs;
    for (long long k = 2; k <= 6; ++k) {
        std::vector<Degree> v = {2, 2};
        v.insert(v.end(), static_cast<std::size_t>(2 * k), 1);
        auto r = census_ratio(DegreeSequence(v), 0, 1, 2);
        errs.push_back(std::abs(r.rho / r.prediction - 1.0));
    }
    bool err_decreasing = true;
    for (std::size_t i = 1; i < errs.size(); ++i)
        if (!(errs[i] < errs[i - 1])) err_decreasing = false;

    Outcome o;
    o.pass = bad == 0 && exact_ok && err_decreasing;
    std::ostringstream os;
    os << lines.size() << " switching properties, " << bad << " failures";
    if (!first_bad.empty()) os << " (first: " << first_bad << ")";
    os << "; exact rho_2 " << (exact_ok ? "ok" : "WRONG") << "; rel errs";
    for (double e : errs) os << " " << fmt(e);
    o.detail = os.str();
    return o;
}

// 6. 1000 deterministically generated mixed-family sequences (n up to 10^4):
//    every literal moment/functional inequality in the bound battery must
//    hold exactly (rational arithmetic, zero violations).
Outcome criterion6() {
    long long violations = 0, lines_checked = 0;
    std::string first_bad;
    for (int idx = 0; idx < 1000; ++idx) {
        Rng r = substream(991, static_cast<std::uint64_t>(idx));
        FamilySpec spec;
        switch (idx % 5) {
            case 0:
                spec.kind = FamilyKind::regular;
                spec.n = 50 + static_cast<long long>(r.next_below(9951));
                spec.degree = 3 + static_cast<long long>(r.next_below(6));
                break;
            case 1: {
                spec.kind = FamilyKind::bivalued;
                spec.n = 20 + static_cast<long long>(r.next_below(9981));
                spec.delta_small = 3 + static_cast<long long>(r.next_below(3));
                spec.delta_big = spec.delta_small + static_cast<long long>(r.next_below(40));
                spec.ell = static_cast<long long>(
                    r.next_below(static_cast<std::uint64_t>(std::min<long long>(spec.n, 50)) + 1));
                break;
            }
            case 2:
                spec.kind = FamilyKind::powerlaw;
                spec.n = 100 + static_cast<long long>(r.next_below(1401));
                spec.gamma = 2.1 + 0.1 * static_cast<double>(r.next_below(15));
                spec.c = 0.5 + 0.25 * static_cast<double>(r.next_below(3));
                break;
            case 3:
                spec.kind = FamilyKind::strict_powerlaw;
                spec.n = 100 + static_cast<long long>(r.next_below(1401));
                spec.gamma = 2.1 + 0.1 * static_cast<double>(r.next_below(15));
                spec.c = 0.5 + 0.25 * static_cast<double>(r.next_below(3));
                break;
            default: {
                spec.kind = FamilyKind::longtail;
                spec.n = 1000 + static_cast<long long>(r.next_below(9001));
                const double gammas[] = {1.3, 1.5, 1.7, 2.3, 2.5, 2.7};
                spec.gamma = gammas[r.next_below(6)];
                spec.alpha = 0.51 + 0.01 * static_cast<double>(r.next_below(8));
                const double blim =
                    spec.gamma > 2
                        ? (3.0 - 5.0 * spec.alpha) / (1.0 + 6.0 / spec.gamma)
                        : (3.0 - 5.0 * spec.alpha) * spec.gamma / 8.0;
                spec.beta = blim * (0.2 + 0.6 * r.next_double());
                break;
            }
        }
        DegreeSequence d = generate(spec).d;
        for (const auto& l : verify_bounds(d)) {
            ++lines_checked;
            if (!l.ok) {
                ++violations;
                if (first_bad.empty()) first_bad = l.name + " on " + family_name(spec.kind);
            }
        }
    }
    Outcome o;
    o.pass = violations == 0;
    std::ostringstream os;
    os << "1000 sequences, " << lines_checked << " inequality lines, " << violations
       << " violations";
    if (!first_bad.empty()) os << " (first: " << first_bad << ")";
    o.detail = os.str();
    return o;
}

// 7. Heavy-entry mass functions: on a 1000-point (d_i, d_j, M1) grid the
//    masses are a probability vector with no mass at multiplicity 1 and the
//    ratio P(m)/P(m-1) <= lambda/m for m >= 3; the signature sampler on
//    d = (2,2) reproduces P(double edge) = 1/17 within 3 sigma at 10^5
//    draws.
Outcome criterion7() {
    long long grid_points = 0;
    bool grid_ok = true;
    const long long m1s[] = {8, 12, 16, 20, 24, 28, 32, 40, 48, 64};
    for (long long m1 : m1s)
        for (Degree di = 1; di <= 10; ++di)
            for (Degree dj = 1; dj <= 10; ++dj) {
                ++grid_points;
                auto pm = pair_masses(di, dj, m1);
                double sum = 0.0;
                for (double x : pm) {
                    if (x < 0.0) grid_ok = false;
                    sum += x;
                }
                if (std::abs(sum - 1.0) > 1e-12) grid_ok = false;
                if (pm.size() > 1 && pm[1] != 0.0) grid_ok = false;
                const double lam =
                    static_cast<double>(di) * static_cast<double>(dj) /
                    static_cast<double>(m1);
                for (std::size_t m = 3; m < pm.size(); ++m)
                    if (pm[m - 1] > 0.0 &&
                        pm[m] / pm[m - 1] > lam / static_cast<double>(m) + 1e-12)
                        grid_ok = false;
            }
    for (long long m1 : m1s)
        for (Degree d = 1; d <= 10; ++d) {
            auto lm = loop_masses(d, m1);
            double sum = 0.0;
            for (double x : lm) {
                if (x < 0.0) grid_ok = false;
                sum += x;
            }
            if (std::abs(sum - 1.0) > 1e-12) grid_ok = false;
        }

    DegreeSequence d22({2, 2});
    const long long draws = 100000;
    long long doubles = 0;
    for (long long k = 0; k < draws; ++k) {
        Rng rng = substream(20250807, static_cast<std::uint64_t>(k));
        if (sample_signature_omega_star(d22, rng).multi(0, 1) == 2) ++doubles;
    }
    const double p = 1.0 / 17.0;
    const double phat = static_cast<double>(doubles) / static_cast<double>(draws);
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(draws));
    const bool sampler_ok = std::abs(phat - p) <= 3.0 * sigma;

    Outcome o;
    o.pass = grid_ok && sampler_ok;
    o.detail = std::to_string(grid_points) + " grid points " +
               (grid_ok ? "ok" : "FAILED") + "; sampler phat=" + fmt(phat) +
               " target=" + fmt(p) + " 3sigma=" + fmt(3.0 * sigma);
    return o;
}

// 8. Specialized formulas against the general one: the powerlaw estimate at
//    gamma = 2.6 (scale 10^4) and the two-valued estimate at
//    (delta, Delta, ell, n) = (3, 63, 6, 10^4) must agree with the general
//    log-count within C * sqrt(xi), C = 10 frozen, xi the larger of the two
//    methods' error functionals.
Outcome criterion8() {
    const double C = 10.0;

    FamilySpec pl;
    pl.kind = FamilyKind::powerlaw;
    pl.n = 10000;
    pl.gamma = 2.6;
    pl.c = 1.0;
    DegreeSequence dpl = generate(pl).d;
    MethodParams mp;
    mp.gamma = 2.6;
    auto gen_pl = estimate_log_g(dpl, Method::general, {}, true);
    auto spc_pl = estimate_log_g(dpl, Method::powerlaw, mp, true);
    const double gap_pl = std::abs(spc_pl.log_g - gen_pl.log_g);
    const double tol_pl = C * std::max(spc_pl.sqrt_xi, gen_pl.sqrt_xi);

    FamilySpec bv;
    bv.kind = FamilyKind::bivalued;
    bv.n = 10000;
    bv.delta_small = 3;
    bv.delta_big = 63;  // floor(n^0.45)
    bv.ell = 6;         // floor(n^0.2)
    DegreeSequence dbv = generate(bv).d;
    auto gen_bv = estimate_log_g(dbv, Method::general, {}, true);
    auto spc_bv = estimate_log_g(dbv, Method::bivalued, {}, true);
    const double gap_bv = std::abs(spc_bv.log_g - gen_bv.log_g);
    const double tol_bv = C * std::max(spc_bv.sqrt_xi, gen_bv.sqrt_xi);

    Outcome o;
    o.pass = std::isfinite(gap_pl) && gap_pl <= tol_pl && std::isfinite(gap_bv) &&
             gap_bv <= tol_bv;
    o.detail = "powerlaw gap=" + fmt(gap_pl) + " tol=" + fmt(tol_pl) +
               "; bivalued gap=" + fmt(gap_bv) + " tol=" + fmt(tol_bv);
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <criterion 1..8>\n", argv[0]);
        return 2;
    }
    const int c = std::atoi(argv[1]);
    Outcome o;
    switch (c) {
        case 1: o = criterion1(); break;
        case 2: o = criterion2(); break;
        case 3: o = criterion3(); break;
        case 4: o = criterion4(); break;
        case 5: o = criterion5(); break;
        case 6: o = criterion6(); break;
        case 7: o = criterion7(); break;
        case 8: o = criterion8(); break;
        default:
            std::fprintf(stderr, "criterion must be 1..8\n");
            return 2;
    }
    std::printf("criterion %d: %s (%s)\n", c, o.pass ? "PASS" : "FAIL",
                o.detail.c_str());
    return o.pass ? 0 : 1;
}
