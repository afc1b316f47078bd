#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "degseq/core.hpp"
#include "degseq/rng.hpp"

namespace degseq {

// One uniform perfect matching: repeatedly pair the smallest unmatched point
// with a uniformly chosen other unmatched point (one draw per pair, swap
// removal from the candidate pool).  O(M1), deterministic given the rng.
Pairing sample_pairing(const DegreeSequence& d, Rng& rng);

struct MonteCarloResult {
    long long samples = 0;
    long long successes = 0;
    double p_hat = 0.0;
    double log_p_hat = 0.0;  // -infinity when successes == 0
    double wilson_low = 0.0;
    double wilson_high = 0.0;
    std::uint64_t seed = 0;
    double wall_ms = 0.0;
    int threads = 1;
};

// 95% Wilson score interval.
std::pair<double, double> wilson_interval(long long successes, long long samples);

// P(simple) by simulation.  Sample k draws from substream(seed, k), so the
// estimate is a function of (seed, samples) alone, whatever the thread count.
MonteCarloResult estimate_p_simple(const DegreeSequence& d, long long samples,
                                   std::uint64_t seed, int threads = 0);

// Empirical census of sampled signatures under the same substream contract.
std::map<SignatureMatrix, long long> sample_signature_census(const DegreeSequence& d,
                                                             long long samples,
                                                             std::uint64_t seed,
                                                             int threads = 0);

// Literal per-pair and per-loop-vertex statistics of a signature matrix.
struct HeavyPairStat {
    int i = 0, j = 0;
    long long m = 0;               // m_ij
    long long z_ij = 0;            // Z - m_ij
    long long w_ij = 0, w_ji = 0;  // sum of (d_w - 2) over multi-neighbors of i (w != j), of j
    long long q_ij = 0;            // sum (d_u-2)(d_v-2) over heavy pairs other than (i,j)
    long long r_ij = 0, r_ji = 0;  // sum of m_iw over multi-neighbors w of i, w not in {i,j}
    double eta_term = 0.0;         // this pair's m_ij * (...) summand of eta
};

struct LoopVertexStat {
    int i = 0;
    long long m = 0;     // m_ii
    long long z_ii = 0;  // Z0 - m_ii
    double kappa_i = 0.0;
};

struct SignatureStats {
    long long z = 0;   // sum of off-diagonal multiplicities >= 2
    long long z2 = 0;  // sum of their squares
    long long z0 = 0;  // total loop count
    long long z3 = 0;  // sum of squared loop counts
    long long k = 0;   // sum (d_u - 2) m_uu
    long long d = 0;   // sum (d_u - 2) over vertices with a loop
    std::vector<HeavyPairStat> heavy;
    std::vector<LoopVertexStat> loop_vertices;
};

SignatureStats signature_stats(const SignatureMatrix& m, const DegreeSequence& d);

// Per-signature switching error totals: eta for the multi-edge phase, kappa
// for the loop phase, xi their sum.
struct EtaKappaXi {
    double eta = 0.0;
    double kappa = 0.0;
    double xi = 0.0;
};

EtaKappaXi eta_kappa_xi(const SignatureMatrix& m, const DegreeSequence& d);

// Acceptance threshold xi_1 = sqrt(xi(d)) and the class test xi(M) <= xi_1.
double xi_one(const DegreeSequence& d);
bool in_class(const SignatureMatrix& m, const DegreeSequence& d, double xi1);

// One draw of the independent-entry signature model: iterating over the
// prefix of vertices with degree >= 2 (the rest cannot hold a heavy entry),
// vertex i draws its loop entry and then the off-diagonal entries (i, j) for
// j > i, each by inverse CDF on the normalized series masses.
SignatureMatrix sample_signature_omega_star(const DegreeSequence& d, Rng& rng);

}  // namespace degseq
