#include "degseq/pairing_model.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "degseq/errbounds.hpp"
#include "degseq/errors.hpp"
#include "degseq/estimator.hpp"
#include "degseq/threads.hpp"

namespace degseq {

namespace {

// Pool of unmatched points with O(1) swap removal.
struct PointPool {
    std::vector<std::int32_t> pool;
    std::vector<std::int32_t> pos;

    void reset(long long m1) {
        pool.resize(m1);
        pos.resize(m1);
        std::iota(pool.begin(), pool.end(), 0);
        std::iota(pos.begin(), pos.end(), 0);
        live = m1;
    }
    void remove(std::int32_t x) {
        std::int32_t ix = pos[x];
        std::int32_t last = pool[live - 1];
        pool[ix] = last;
        pos[last] = ix;
        --live;
    }
    long long live = 0;
};

// Fills mate[] with a uniform perfect matching: the lowest unmatched point is
// paired with a uniform choice among the others, which realizes every
// matching with probability 1/(M1-1)!!.
void fill_matching(std::vector<std::int32_t>& mate, PointPool& pp, Rng& rng) {
    const long long m1 = static_cast<long long>(mate.size());
    std::fill(mate.begin(), mate.end(), static_cast<std::int32_t>(-1));
    pp.reset(m1);
    for (std::int32_t a = 0; a < m1; ++a) {
        if (mate[a] != -1) continue;
        pp.remove(a);
        std::int32_t b = pp.pool[static_cast<std::size_t>(rng.next_below(pp.live))];
        pp.remove(b);
        mate[a] = b;
        mate[b] = a;
    }
}

// One sample: true iff the induced multigraph is simple.  Aborting early on
// the first loop or repeated edge is safe because every sample runs on its
// own substream.
bool sample_is_simple(const Pairing& layout, PointPool& pp,
                      std::vector<std::int32_t>& mate, std::vector<std::int64_t>& edges,
                      Rng& rng) {
    const long long m1 = layout.points();
    const long long n = layout.n();
    std::fill(mate.begin(), mate.end(), static_cast<std::int32_t>(-1));
    pp.reset(m1);
    edges.clear();
    for (std::int32_t a = 0; a < m1; ++a) {
        if (mate[a] != -1) continue;
        pp.remove(a);
        std::int32_t b = pp.pool[static_cast<std::size_t>(rng.next_below(pp.live))];
        pp.remove(b);
        mate[a] = b;
        mate[b] = a;
        int u = layout.bin_of[a], v = layout.bin_of[b];
        if (u == v) return false;  // loop
        if (u > v) std::swap(u, v);
        edges.push_back(static_cast<std::int64_t>(u) * (n + 1) + v);
    }
    std::sort(edges.begin(), edges.end());
    return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

}  // namespace

Pairing sample_pairing(const DegreeSequence& d, Rng& rng) {
    Pairing p = pairing_layout(d);
    PointPool pp;
    fill_matching(p.mate, pp, rng);
    return p;
}

std::pair<double, double> wilson_interval(long long successes, long long samples) {
    if (samples <= 0) return {0.0, 1.0};
    const double z = 1.959963984540054;  // 97.5% normal quantile
    const double n = static_cast<double>(samples);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

MonteCarloResult estimate_p_simple(const DegreeSequence& d, long long samples,
                                   std::uint64_t seed, int threads) {
    if (samples < 1) throw InvalidInput("samples must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    const Pairing layout = pairing_layout(d);
    const int nthreads = resolve_threads(threads);

    long long successes = 0;
#pragma omp parallel num_threads(nthreads) reduction(+ : successes)
    {
        PointPool pp;
        std::vector<std::int32_t> mate(static_cast<std::size_t>(layout.points()));
        std::vector<std::int64_t> edges;
        edges.reserve(static_cast<std::size_t>(layout.points() / 2));
#pragma omp for schedule(static)
        for (long long k = 0; k < samples; ++k) {
            Rng rng = substream(seed, static_cast<std::uint64_t>(k));
            if (sample_is_simple(layout, pp, mate, edges, rng)) ++successes;
        }
    }

    MonteCarloResult r;
    r.samples = samples;
    r.successes = successes;
    r.p_hat = static_cast<double>(successes) / static_cast<double>(samples);
    r.log_p_hat = successes > 0 ? std::log(r.p_hat)
                                : -std::numeric_limits<double>::infinity();
    std::tie(r.wilson_low, r.wilson_high) = wilson_interval(successes, samples);
    r.seed = seed;
    r.threads = nthreads;
    r.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
    return r;
}

std::map<SignatureMatrix, long long> sample_signature_census(const DegreeSequence& d,
                                                             long long samples,
                                                             std::uint64_t seed,
                                                             int threads) {
    if (samples < 1) throw InvalidInput("samples must be >= 1");
    const Pairing layout = pairing_layout(d);
    const int nthreads = resolve_threads(threads);
    std::map<SignatureMatrix, long long> census;

#pragma omp parallel num_threads(nthreads)
    {
        PointPool pp;
        Pairing p = layout;
        std::map<SignatureMatrix, long long> local;
#pragma omp for schedule(static)
        for (long long k = 0; k < samples; ++k) {
            Rng rng = substream(seed, static_cast<std::uint64_t>(k));
            fill_matching(p.mate, pp, rng);
            local[signature_of(p)] += 1;
        }
        // Merging by addition commutes, so the census is independent of the
        // thread interleaving.
#pragma omp critical(degseq_census_merge)
        for (const auto& [sig, c] : local) census[sig] += c;
    }
    return census;
}

SignatureStats signature_stats(const SignatureMatrix& m, const DegreeSequence& d) {
    validate_signature(m, d);
    SignatureStats st;
    for (const auto& [e, c] : m.multis) {
        st.z += c;
        st.z2 += c * c;
    }
    for (const auto& [i, c] : m.loops) {
        st.z0 += c;
        st.z3 += c * c;
        st.k += (d[i] - 2) * c;
        st.d += d[i] - 2;
    }

    const double m1 = static_cast<double>(d.m1());
    long long m2ll = 0;
    for (long long i = 0; i < d.n(); ++i) m2ll += d[i] * (d[i] - 1);
    const double m2 = static_cast<double>(m2ll);

    // Multi-edge neighborhoods (off-diagonal only; loops are tracked apart).
    std::map<int, std::vector<std::pair<int, long long>>> nbrs;
    long long q_total = 0;
    for (const auto& [e, c] : m.multis) {
        auto [i, j] = e;
        nbrs[i].push_back({j, c});
        nbrs[j].push_back({i, c});
        q_total += (d[i] - 2) * (d[j] - 2);
    }

    for (const auto& [e, c] : m.multis) {
        auto [i, j] = e;
        HeavyPairStat h;
        h.i = i;
        h.j = j;
        h.m = c;
        h.z_ij = st.z - c;
        for (const auto& [w, mw] : nbrs[i])
            if (w != j) {
                h.w_ij += d[w] - 2;
                h.r_ij += mw;
            }
        for (const auto& [w, mw] : nbrs[j])
            if (w != i) {
                h.w_ji += d[w] - 2;
                h.r_ji += mw;
            }
        h.q_ij = q_total - (d[i] - 2) * (d[j] - 2);
        const double di = static_cast<double>(d[i]);
        const double dj = static_cast<double>(d[j]);
        h.eta_term =
            static_cast<double>(c) *
            (static_cast<double>(h.z_ij + h.w_ij + h.w_ji + d[i] - 2) / m1 +
             (di - 2.0) * m2 / (m1 * m1) +
             static_cast<double>(h.r_ij + m.loop(i)) / di +
             static_cast<double>(h.r_ji + m.loop(j)) / dj +
             static_cast<double>(h.q_ij) / (m1 * m1));
        st.heavy.push_back(h);
    }

    for (const auto& [i, c] : m.loops) {
        LoopVertexStat lv;
        lv.i = i;
        lv.m = c;
        lv.z_ii = st.z0 - c;
        const double mi = static_cast<double>(c);
        const double di2 = static_cast<double>(d[i] - 2);
        lv.kappa_i = mi * mi / m1 + di2 / m1 + mi * static_cast<double>(lv.z_ii) / m1 +
                     mi * mi * m2 / (m1 * m1) + mi * m2 * di2 / (m1 * m1) +
                     mi * m2 * m2 / (m1 * m1 * m1);
        st.loop_vertices.push_back(lv);
    }
    return st;
}

EtaKappaXi eta_kappa_xi(const SignatureMatrix& m, const DegreeSequence& d) {
    const SignatureStats st = signature_stats(m, d);
    const double m1 = static_cast<double>(d.m1());
    long long m2ll = 0;
    for (long long i = 0; i < d.n(); ++i) m2ll += d[i] * (d[i] - 1);
    const double m2 = static_cast<double>(m2ll);

    EtaKappaXi r;
    r.eta = (static_cast<double>(st.z2) + static_cast<double>(st.z) * st.z0) / m1 +
            m2 * static_cast<double>(st.z2) / (m1 * m1) +
            m2 * m2 * static_cast<double>(st.z) / (m1 * m1 * m1);
    for (const auto& h : st.heavy) r.eta += h.eta_term;
    for (const auto& lv : st.loop_vertices) r.kappa += lv.kappa_i;
    r.xi = r.eta + r.kappa;
    return r;
}

double xi_one(const DegreeSequence& d) {
    return std::sqrt(method_hypotheses(d, Method::general).xi);
}

bool in_class(const SignatureMatrix& m, const DegreeSequence& d, double xi1) {
    return eta_kappa_xi(m, d).xi <= xi1;
}

SignatureMatrix sample_signature_omega_star(const DegreeSequence& d, Rng& rng) {
    const long long m1 = d.m1();
    SignatureMatrix sig;
    // Vertices of degree < 2 cannot carry a loop or a heavy entry (their
    // masses above index 0 vanish), so only the degree >= 2 prefix of the
    // sorted sequence is sampled.  Draw order: vertex i's loop entry, then
    // its pair entries (i, j) for ascending j.
    long long t = 0;
    while (t < d.n() && d[t] >= 2) ++t;
    auto draw = [&](const std::vector<double>& masses) -> long long {
        const double u = rng.next_double();
        double cum = 0.0;
        for (std::size_t m = 0; m < masses.size(); ++m) {
            cum += masses[m];
            if (u < cum) return static_cast<long long>(m);
        }
        return 0;  // rounding remainder: treat as the no-entry mass
    };
    for (long long i = 0; i < t; ++i) {
        long long loop = draw(loop_masses(d[i], m1));
        if (loop >= 1) sig.loops[static_cast<int>(i)] = loop;
        for (long long j = i + 1; j < t; ++j) {
            long long mij = draw(pair_masses(d[i], d[j], m1));
            if (mij >= 2) sig.multis[{static_cast<int>(i), static_cast<int>(j)}] = mij;
        }
    }
    return sig;
}

}  // namespace degseq
