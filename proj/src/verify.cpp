#include "degseq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "degseq/bigint.hpp"
#include "degseq/errbounds.hpp"
#include "degseq/estimator.hpp"
#include "degseq/kahan.hpp"
#include "degseq/moments.hpp"
#include "degseq/oracle.hpp"
#include "degseq/pairing_model.hpp"
#include "degseq/rng.hpp"
#include "degseq/switching.hpp"

namespace degseq {

namespace {

std::string seq_str(const DegreeSequence& d) {
    std::ostringstream os;
    for (long long i = 0; i < d.n(); ++i) os << (i ? "," : "") << d[i];
    return os.str();
}

bool near(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Aggregates one property over many cases; keeps the first counterexample.
struct Agg {
    bool ok = true;
    long long cases = 0;
    std::string detail;

    void pass() { ++cases; }
    void fail(const std::string& what) {
        ++cases;
        if (ok) {
            ok = false;
            detail = what;
        }
    }
    void check(bool cond, const std::string& what) {
        if (cond)
            pass();
        else
            fail(what);
    }
    CheckLine line(const std::string& suite, const std::string& name) const {
        CheckLine c;
        c.suite = suite;
        c.name = name;
        c.ok = ok;
        c.detail = ok ? std::to_string(cases) + " cases" : detail;
        return c;
    }
};

void partitions_rec(long long remaining, Degree maxpart, std::vector<Degree>& cur,
                    std::vector<DegreeSequence>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (Degree p = std::min<long long>(maxpart, remaining); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<DegreeSequence> all_sequences_up_to(long long max_m1) {
    std::vector<DegreeSequence> out;
    std::vector<Degree> cur;
    for (long long s = 2; s <= max_m1; s += 2) partitions_rec(s, s, cur, out);
    return out;
}

bool all_ok(const std::vector<CheckLine>& lines) {
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& c) { return c.ok; });
}

// ---------------------------------------------------------------------------
// moments suite

std::vector<CheckLine> verify_moments(long long max_m1) {
    const std::string suite = "moments";
    auto seqs = all_sequences_up_to(max_m1);
    Agg naive_vs_hist, hist_vs_exact, u_nonneg, literal_ge_strict;
    Agg profile_basics, split_sums, lambda_checks;

    for (const auto& d : seqs) {
        const std::string tag = " at d=" + seq_str(d);
        std::array<cpp_rational, 8> exact_by_range[2];
        int wi = 0;
        for (WRange w : {WRange::literal, WRange::strict}) {
            auto un = u_functionals_naive(d, w);
            auto uh = u_functionals_double(d, w);
            auto ue = u_functionals_exact(d, w);
            exact_by_range[wi++] = ue;
            for (int k = 1; k <= 7; ++k) {
                std::string which = " U" + std::to_string(k) +
                                    (w == WRange::literal ? " literal" : " strict") + tag;
                naive_vs_hist.check(near(un[k], uh[k], 1e-9), "naive!=grouped" + which);
                hist_vs_exact.check(near(uh[k], static_cast<double>(ue[k]), 1e-9),
                                    "grouped!=exact" + which);
                u_nonneg.check(ue[k] >= 0, "negative" + which);
            }
        }
        for (int k = 1; k <= 7; ++k)
            literal_ge_strict.check(exact_by_range[0][k] >= exact_by_range[1][k],
                                    "literal < strict U" + std::to_string(k) + tag);

        auto prof = moments(d, 4);
        profile_basics.check(prof.M[0] == d.n(), "M0 != n" + tag);
        profile_basics.check(prof.M[1] == d.m1(), "M1 != sum" + tag);
        profile_basics.check(prof.delta == d.max_degree(), "delta mismatch" + tag);
        profile_basics.check(prof.tau == tau(d) && prof.tau <= d.m1(), "tau mismatch" + tag);
        cpp_int hist_total = 0;
        for (std::size_t a = 0; a < prof.hist.size(); ++a)
            hist_total += cpp_int(prof.hist.value[a]) * prof.hist.count[a];
        profile_basics.check(hist_total == d.m1(), "histogram mass != M1" + tag);

        for (long long h = 0; h <= d.n(); ++h) {
            auto s = split(d, h);
            for (int k = 1; k <= 4; ++k)
                split_sums.check(s.H[k] + s.L[k] == prof.M[k],
                                 "H+L != M at k=" + std::to_string(k) + " h=" +
                                     std::to_string(h) + tag);
        }

        if (d.n() >= 2) {
            long long jmax = std::min<long long>(d.n() - 1, 3);
            for (long long j = 1; j <= jmax; ++j) {
                cpp_rational expect(cpp_int(d[0]) * d[j], d.m1());
                lambda_checks.check(lambda(d, 0, j) == expect && lambda(d, j, 0) == expect,
                                    "lambda value/symmetry" + tag);
            }
        }
    }

    std::vector<CheckLine> out;
    out.push_back(naive_vs_hist.line(suite, "pairwise and degree-grouped U agree"));
    out.push_back(hist_vs_exact.line(suite, "double and exact-rational U agree"));
    out.push_back(u_nonneg.line(suite, "U1..U7 nonnegative"));
    out.push_back(literal_ge_strict.line(suite, "full inner range >= restricted inner range"));
    out.push_back(profile_basics.line(suite, "moment profile basics (M0, M1, delta, tau, histogram)"));
    out.push_back(split_sums.line(suite, "head/tail split sums H_k + L_k = M_k"));
    out.push_back(lambda_checks.line(suite, "lambda value and symmetry"));
    return out;
}

// ---------------------------------------------------------------------------
// exact inequality battery for the bound functionals

std::vector<CheckLine> verify_bounds(const DegreeSequence& d) {
    const std::string suite = "bounds";
    const std::string tag = " at d=" + (d.n() <= 24 ? seq_str(d) : "(n=" + std::to_string(d.n()) + ")");
    std::vector<CheckLine> out;
    auto add = [&](const std::string& name, bool ok, const std::string& detail = "") {
        CheckLine c;
        c.suite = suite;
        c.name = name;
        c.ok = ok;
        c.detail = ok ? detail : (detail.empty() ? "violated" + tag : detail + tag);
        out.push_back(c);
    };

    const auto u = u_functionals_exact(d, WRange::literal);
    const auto prof = moments(d, 4);
    const cpp_rational M1(prof.M[1]), M2(prof.M[2]), M3(prof.M[3]), M4(prof.M[4]);
    const cpp_rational M1_2 = M1 * M1, M1_4 = M1_2 * M1_2;

    add("U1 <= M3/M1", u[1] <= M3 / M1);
    add("U2 <= M2^2/M1^2", u[2] <= M2 * M2 / M1_2);
    if (d.n() >= 2)
        add("U2 <= (M1/2) max lambda", u[2] <= (M1 / 2) * lambda(d, 0, 1));
    add("U3 <= M2 M3 M4 / M1^4", u[3] <= M2 * M3 * M4 / M1_4);
    add("U4 <= M2 M3 / M1^2", u[4] <= M2 * M3 / M1_2);
    add("U5 <= M2^2 M3 / M1^4", u[5] <= M2 * M2 * M3 / M1_4);

    std::set<long long> hs = {0, 1, 2, d.n() / 2, d.n() - 1, d.n(), default_split_point(d)};
    if (d.n() <= 64)
        for (long long h = 0; h <= d.n(); ++h) hs.insert(h);
    Agg s1, s2, s3, s4, s5, sandwich;
    for (long long h : hs) {
        if (h < 0 || h > d.n()) continue;
        const auto sp = split(d, h);
        const cpp_rational H1(sp.H[1]), H2(sp.H[2]), H3(sp.H[3]), H4(sp.H[4]);
        const cpp_rational L2(sp.L[2]), L3(sp.L[3]), L4(sp.L[4]);
        const std::string hh = "h=" + std::to_string(h) + tag;
        s1.check(u[1] <= L3 / M1 + H1, hh);
        s2.check(u[2] <= L2 * M2 / M1_2 + H1 * H1 / M1, hh);
        s3.check(u[3] <= L4 * M3 * M2 / M1_4 + H4 * L3 * L2 / M1_4 + H3 * H1 * L3 / (M1_2 * M1) +
                             H2 * H1 * L2 / M1_2 + H1 * H1 * H1 / M1,
                 hh);
        s4.check(u[4] <= L3 * M2 / M1_2 + H3 * L2 / M1_2 + H2 * H1 / M1, hh);
        s5.check(u[5] <= L3 * M2 * M2 / M1_4 + H3 * L2 * L2 / M1_4 +
                             2 * H2 * H1 * L2 / (M1_2 * M1) + H1 * H1 * H1 / M1_2,
                 hh);
        if (h < d.n()) {
            const cpp_rational dh(d[h]);
            sandwich.check(L3 <= (dh - 2) * L2 && (dh - 2) * H2 <= H3, hh);
        }
    }
    auto addagg = [&](const Agg& a, const std::string& name) {
        out.push_back(a.line(suite, name));
    };
    addagg(s1, "U1 split bound");
    addagg(s2, "U2 split bound");
    addagg(s3, "U3 split bound");
    addagg(s4, "U4 split bound");
    addagg(s5, "U5 split bound");
    addagg(sandwich, "tail cubic vs quadratic sandwich at the split degree");
    return out;
}

// ---------------------------------------------------------------------------
// switching suite

namespace {

using MultiKey = std::tuple<SignatureMatrix, int, int, long long>;
using LoopKey = std::tuple<std::map<int, long long>, int, long long>;

template <class Map>
bool maps_equal(const Map& a, const Map& b, std::string& why) {
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        long long w = it == b.end() ? 0 : it->second;
        if (v != w) {
            why = "forward " + std::to_string(v) + " vs inverse " + std::to_string(w);
            return false;
        }
    }
    for (const auto& [k, v] : b)
        if (a.find(k) == a.end() && v != 0) {
            why = "inverse-only key with count " + std::to_string(v);
            return false;
        }
    return true;
}

}  // namespace

std::vector<CheckLine> verify_switching(long long max_m1) {
    const std::string suite = "switching";
    auto seqs = all_sequences_up_to(max_m1);
    Agg sound;              // good implies effective, all four operations
    Agg rt_multi_fwd;       // good forward multi: induced inverse good, returns source
    Agg rt_multi_inv;       // good inverse multi: induced forward returns its source
    Agg rt_loop_clean;      // good forward loop on multi-edge-free source: full round trip
    Agg rt_loop_any;        // good forward loop anywhere: diagonal removed, off-diagonal never grows
    Agg rt_loop_inv;        // good inverse loop: induced forward returns its source
    Agg tallies_multi, tallies_loop;

    for (const auto& d : seqs) {
        const std::string tag = " at d=" + seq_str(d);
        const int n = static_cast<int>(d.n());
        std::map<MultiKey, long long> fwd_m, inv_m;
        std::map<LoopKey, long long> fwd_l, inv_l;

        enumerate_pairings(d, [&](const Pairing& p) {
            const Multigraph g = to_multigraph(p);
            const SignatureMatrix sig = signature_of(p);
            const bool multi_free = sig.multis.empty();

            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    const long long c = g.multiplicity(i, j);
                    if (c >= 1) {
                        SignatureMatrix rest = sig;
                        rest.multis.erase({i, j});
                        for (const auto& s : enumerate_forward_multi(p, i, j)) {
                            auto o = forward_multi(p, s);
                            sound.check(!o.good || o.effective, "forward multi" + tag);
                            if (o.effective) ++fwd_m[{rest, i, j, c}];
                            if (o.good) {
                                auto back = inverse_multi(*o.result, induced_inverse(s));
                                rt_multi_fwd.check(back.good && back.result &&
                                                       back.result->mate == p.mate,
                                                   "multi round trip" + tag);
                            }
                        }
                    } else {
                        const long long mcap = std::min(d[i], d[j]);
                        for (long long m = 1; m <= mcap; ++m) {
                            for (const auto& s :
                                 enumerate_inverse_multi(p, i, j, static_cast<int>(m))) {
                                auto o = inverse_multi(p, s);
                                sound.check(!o.good || o.effective, "inverse multi" + tag);
                                if (o.effective) ++inv_m[{sig, i, j, m}];
                                if (o.good && o.result) {
                                    auto fwd = forward_multi(*o.result, induced_forward(p, s));
                                    rt_multi_inv.check(fwd.result && fwd.result->mate == p.mate,
                                                       "inverse-multi return" + tag);
                                }
                            }
                        }
                    }
                }
            }

            for (int i = 0; i < n; ++i) {
                const long long lc = g.multiplicity(i, i);
                if (lc >= 1) {
                    std::map<int, long long> diag_rest = sig.loops;
                    diag_rest.erase(i);
                    for (const auto& s : enumerate_forward_loop(p, i)) {
                        auto o = forward_loop(p, s);
                        sound.check(!o.good || o.effective, "forward loop" + tag);
                        if (o.effective) ++fwd_l[{diag_rest, i, lc}];
                        if (o.good) {
                            const SignatureMatrix rsig = signature_of(*o.result);
                            bool shrunk = rsig.loops == diag_rest;
                            for (const auto& [e, v] : rsig.multis)
                                shrunk = shrunk && v <= sig.multi(e.first, e.second);
                            rt_loop_any.check(shrunk, "loop removal side effects" + tag);
                            if (multi_free) {
                                SignatureMatrix want = sig;
                                want.loops.erase(i);
                                auto back = inverse_loop(*o.result, induced_inverse(s));
                                rt_loop_clean.check(rsig == want && back.good && back.result &&
                                                        back.result->mate == p.mate,
                                                    "loop round trip" + tag);
                            }
                        }
                    }
                } else if (d[i] >= 2) {
                    for (long long m = 1; 2 * m <= d[i]; ++m) {
                        for (const auto& s :
                             enumerate_inverse_loop(p, i, static_cast<int>(m))) {
                            auto o = inverse_loop(p, s);
                            sound.check(!o.good || o.effective, "inverse loop" + tag);
                            if (o.effective) ++inv_l[{sig.loops, i, m}];
                            if (o.good && o.result) {
                                auto fwd = forward_loop(*o.result, induced_forward(p, s));
                                rt_loop_inv.check(fwd.result && fwd.result->mate == p.mate,
                                                  "inverse-loop return" + tag);
                            }
                        }
                    }
                }
            }
        });

        std::string why;
        tallies_multi.check(maps_equal(fwd_m, inv_m, why), why + tag);
        tallies_loop.check(maps_equal(fwd_l, inv_l, why), why + tag);
    }

    // Exhaustive class-size identities for a few concrete classes.
    Agg census_id;
    {
        const DegreeSequence d({2, 2, 1, 1, 1, 1});
        const auto census = census_serial(d);
        for (long long m : {1LL, 2LL}) {
            auto r = census_ratio(d, 0, 1, m);
            census_id.check(r.c_star == r.c_0 + r.c_1, "c_star split at m=" + std::to_string(m));
            SignatureMatrix with;
            if (m >= 2) with.multis[{0, 1}] = m;
            auto it = census.find(with);
            long long via_census = it == census.end() ? 0 : it->second;
            if (m >= 2)
                census_id.check(r.c_m == via_census, "class size vs census at m=" +
                                                         std::to_string(m));
            else
                census_id.check(r.c_1 <= via_census, "single-edge class within census");
        }
    }

    std::vector<CheckLine> out;
    out.push_back(sound.line(suite, "no-violation switches always land in the target class"));
    out.push_back(rt_multi_fwd.line(suite, "multi-edge round trip via induced inverse"));
    out.push_back(rt_multi_inv.line(suite, "inverse multi reproduced by induced forward"));
    out.push_back(rt_loop_clean.line(suite,
                                     "loop round trip and exact signature on multi-edge-free sources"));
    out.push_back(rt_loop_any.line(suite, "loop removal never adds off-diagonal multiplicity"));
    out.push_back(rt_loop_inv.line(suite, "inverse loop reproduced by induced forward"));
    out.push_back(tallies_multi.line(suite, "forward/inverse multi-edge incidence counts match"));
    out.push_back(tallies_loop.line(suite, "forward/inverse loop incidence counts match"));
    out.push_back(census_id.line(suite, "class census identities"));
    return out;
}

// ---------------------------------------------------------------------------
// S-formula suite

namespace {

// Visits every signature matrix whose individual entries are realizable for d
// (the independent-entry state space): off-diagonal entries 0 or 2..min(di,dj),
// diagonal entries 0..floor(di/2).
void enum_signatures(const DegreeSequence& d,
                     const std::function<void(const SignatureMatrix&)>& visit) {
    const int n = static_cast<int>(d.n());
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if ((i == j && d[i] >= 2) || (i < j && std::min(d[i], d[j]) >= 2))
                cells.emplace_back(i, j);
    SignatureMatrix m;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            visit(m);
            return;
        }
        auto [i, j] = cells[idx];
        rec(idx + 1);  // entry absent
        if (i == j) {
            for (long long l = 1; 2 * l <= d[i]; ++l) {
                m.loops[i] = l;
                rec(idx + 1);
            }
            m.loops.erase(i);
        } else {
            for (long long v = 2; v <= std::min(d[i], d[j]); ++v) {
                m.multis[{i, j}] = v;
                rec(idx + 1);
            }
            m.multis.erase({i, j});
        }
    };
    rec(0);
}

}  // namespace

std::vector<CheckLine> verify_s_formula() {
    const std::string suite = "s-formula";
    std::vector<CheckLine> out;
    auto add = [&](const std::string& name, bool ok, const std::string& detail = "") {
        out.push_back({suite, name, ok, detail});
    };

    add("pair factor anchor A(2,2;4) = 1.0625", near(pair_series(2, 2, 4), 1.0625, 1e-12));
    add("loop factor anchor B(2;4) = 1.25", near(loop_series(2, 4), 1.25, 1e-12));
    add("S anchor for d=(2,2)",
        near(std::exp(log_s_direct(DegreeSequence({2, 2}))), 1.66015625, 1e-12));

    Agg ge_one;
    for (Degree di = 1; di <= 6; ++di)
        for (Degree dj = 1; dj <= 6; ++dj)
            for (long long m1 : {8LL, 12LL, 20LL, 40LL}) {
                ge_one.check(pair_series(di, dj, m1) >= 1.0 - 1e-12, "pair factor < 1");
                ge_one.check(loop_series(di, m1) >= 1.0 - 1e-12, "loop factor < 1");
            }
    out.push_back(ge_one.line(suite, "independent-entry factors are >= 1"));

    Agg f_props;
    for (const auto& degs : std::vector<std::vector<Degree>>{
             {2, 2}, {2, 2, 2}, {3, 3, 2}, {4, 3, 3, 2}}) {
        const DegreeSequence d(degs);
        f_props.check(near(f_of_signature(d, SignatureMatrix{}), 1.0, 1e-12),
                      "F(no heavy entries) != 1 at d=" + seq_str(d));
        Kahan sum;
        enum_signatures(d, [&](const SignatureMatrix& m) { sum.add(f_of_signature(d, m)); });
        f_props.check(near(sum.value(), std::exp(log_s_direct(d)), 1e-9),
                      "sum of F over all signatures != S at d=" + seq_str(d));
    }
    out.push_back(f_props.line(suite, "F weights: unit at the simple class, total mass S"));

    Agg ladder;
    double prev = std::numeric_limits<double>::infinity();
    for (long long n : {16LL, 32LL, 64LL, 128LL}) {
        std::vector<Degree> degs(n, 3);
        const DegreeSequence d(degs);
        const double gap = std::abs(log_s_direct(d) - log_s_closed(d));
        ladder.check(std::isfinite(gap) && gap < prev,
                     "gap " + std::to_string(gap) + " at n=" + std::to_string(n));
        prev = gap;
    }
    out.push_back(ladder.line(suite, "closed form converges to direct sum on 3-regular ladder"));
    return out;
}

// ---------------------------------------------------------------------------
// independent-entry distribution suite

std::vector<CheckLine> verify_omega_star() {
    const std::string suite = "omega-star";
    std::vector<CheckLine> out;

    Agg normalized, ratio, dominance;
    const std::vector<std::tuple<Degree, Degree, long long>> grid = {
        {1, 1, 8},  {2, 2, 4},  {3, 3, 8},   {5, 4, 12},  {6, 6, 14},
        {8, 5, 20}, {7, 7, 16}, {10, 10, 22}, {12, 9, 30}, {15, 15, 40}};
    for (const auto& [di, dj, m1] : grid) {
        const std::string tag = " at (" + std::to_string(di) + "," + std::to_string(dj) +
                                ";" + std::to_string(m1) + ")";
        const auto pm = pair_masses(di, dj, m1);
        const auto lm = loop_masses(di, m1);
        double ps = 0, ls = 0;
        for (double x : pm) ps += x;
        for (double x : lm) ls += x;
        normalized.check(near(ps, 1.0, 1e-12) && near(ls, 1.0, 1e-12), "mass sum" + tag);
        normalized.check(pm.size() < 2 || pm[1] == 0.0, "single-edge mass not zero" + tag);

        const double lam = static_cast<double>(di) * static_cast<double>(dj) / m1;
        for (std::size_t m = 3; m < pm.size(); ++m)
            if (pm[m - 1] > 0)
                ratio.check(pm[m] / pm[m - 1] <= lam / static_cast<double>(m) + 1e-12,
                            "tail ratio at m=" + std::to_string(m) + tag);

        // Tail dominance by the Poisson law with the same mean lambda.
        double poisson_below = 0.0, fact = 1.0;
        for (std::size_t m = 0; m + 1 < pm.size() && m <= 12; ++m) {
            if (m > 0) fact *= static_cast<double>(m);
            poisson_below += std::exp(-lam) * std::pow(lam, static_cast<double>(m)) / fact;
            if (m + 1 < 2) continue;
            double tail = 0.0;
            for (std::size_t t = m + 1; t < pm.size(); ++t) tail += pm[t];
            dominance.check(tail <= (1.0 - poisson_below) + 1e-12,
                            "tail above Poisson at m>=" + std::to_string(m + 1) + tag);
        }
    }
    out.push_back(normalized.line(suite, "entry distributions are normalized"));
    out.push_back(ratio.line(suite, "successive-mass ratio within lambda/m"));
    out.push_back(dominance.line(suite, "entry tails dominated by Poisson tails"));

    Agg sampler;
    {
        const DegreeSequence d({2, 2});
        const long long draws = 100000;
        long long hits = 0;
        for (long long k = 0; k < draws; ++k) {
            Rng rng = substream(0x5eedbeef, static_cast<std::uint64_t>(k));
            if (sample_signature_omega_star(d, rng).multi(0, 1) == 2) ++hits;
        }
        const double p = 1.0 / 17.0;
        const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(draws));
        const double phat = static_cast<double>(hits) / static_cast<double>(draws);
        sampler.check(std::abs(phat - p) <= 3 * sigma,
                      "double-edge frequency " + std::to_string(phat) + " vs " +
                          std::to_string(p));

        Rng a(12345), b(12345);
        for (int k = 0; k < 5; ++k)
            sampler.check(sample_signature_omega_star(d, a) == sample_signature_omega_star(d, b),
                          "sampler not reproducible");
    }
    out.push_back(sampler.line(suite, "direct sampler matches the analytic masses"));
    return out;
}

// ---------------------------------------------------------------------------
// oracle suite

std::vector<CheckLine> verify_oracle(long long max_m1) {
    const std::string suite = "oracle";
    Agg phi_id, census_ok, two_oracles, edge_moments;

    for (long long m = 2; m <= max_m1; m += 2) {
        cpp_int odds = 1;
        for (long long t = 1; t < m; t += 2) odds *= t;
        phi_id.check(phi_exact(m) == odds, "phi mismatch at m1=" + std::to_string(m));
    }

    auto seqs = all_sequences_up_to(std::min<long long>(max_m1, 10));
    for (const auto& d : seqs) {
        const std::string tag = " at d=" + seq_str(d);
        auto rep = oracle_report(d, true);
        cpp_int total = 0;
        for (const auto& [m, c] : *rep.census) total += c;
        census_ok.check(total == rep.phi, "census total != phi" + tag);
        auto simple_it = rep.census->find(SignatureMatrix{});
        cpp_int simple_count = simple_it == rep.census->end() ? 0 : simple_it->second;
        census_ok.check(simple_count == rep.simple_pairings, "simple cell mismatch" + tag);
        census_ok.check(*rep.census == census_parallel(d, 3), "parallel census differs" + tag);
        two_oracles.check(rep.g == count_simple_graphs(d), "oracles disagree" + tag);
        two_oracles.check(rep.g * factorial_product(d) == rep.simple_pairings,
                          "labeling factor broken" + tag);
        two_oracles.check(rep.p_simple == cpp_rational(rep.simple_pairings, rep.phi),
                          "p_simple mismatch" + tag);
    }

    auto seqs12 = all_sequences_up_to(max_m1);
    for (const auto& d : seqs12) {
        const std::string tag = " at d=" + seq_str(d);
        if (d.n() < 2) continue;
        auto ems = edge_moment_sums(d);
        const long long m1 = d.m1();
        for (int u = 0; u < d.n(); ++u)
            for (int v = u + 1; v < d.n(); ++v) {
                cpp_rational ey(ems.y_sum[u][v], 1);
                ey /= cpp_rational(ems.phi);
                edge_moments.check(ey == cpp_rational(cpp_int(d[u]) * d[v], m1 - 1),
                                   "E[Y] mismatch" + tag);
                cpp_rational ey2(ems.y2_sum[u][v], 1);
                ey2 /= cpp_rational(ems.phi);
                cpp_int num = falling<cpp_int>(d[u], 2) * falling<cpp_int>(d[v], 2);
                edge_moments.check(ey2 == cpp_rational(num, cpp_int(m1 - 1) * (m1 - 3)),
                                   "E[Y(Y-1)] mismatch" + tag);
            }
    }

    std::vector<CheckLine> out;
    out.push_back(phi_id.line(suite, "matching count equals the odd double factorial"));
    out.push_back(census_ok.line(suite, "census totals, simple cell, and parallel agreement"));
    out.push_back(two_oracles.line(suite, "independent simple-graph counts agree"));
    out.push_back(edge_moments.line(suite, "exact first and second edge moments"));
    return out;
}

}  // namespace degseq
