#pragma once

#include <string>
#include <utility>
#include <vector>

#include "degseq/core.hpp"
#include "degseq/errbounds.hpp"

namespace degseq {

// log((M1 - 1)!!) for even M1 >= 0, via lgamma.
double log_phi(long long m1);

// sum_i log(d_i!)
double sum_log_factorials(const DegreeSequence& d);

// sum_{i<j} log(1 + d_i d_j / M1).  Grouped over degree-histogram cells; each
// cell's contribution may be computed in parallel but the final reduction
// runs in a fixed order, so the value does not depend on the thread count.
double sum_log1p_lambda(const DegreeSequence& d, int threads = 0);
double sum_log1p_lambda_naive(const DegreeSequence& d);

struct LogEstimate {
    Method method = Method::general;
    double log_g = 0.0;  // predicted log of the number of simple graphs
    std::vector<std::pair<std::string, double>> breakdown;  // sums to log_g
    double xi = 0.0;     // the method's error functional
    double sqrt_xi = 0.0;
    MethodHypotheses hypotheses;
};

// The main entry point: log of the asymptotic count for the chosen method.
// Throws HypothesisViolation when a fatal precondition fails and force is
// off; with force the estimate is still produced (hypotheses report kept).
LogEstimate estimate_log_g(const DegreeSequence& d, Method method = Method::general,
                           const MethodParams& params = {}, bool force = false,
                           double slack = 1.0, int threads = 0);

// Independent heavy-entry model.  Pair series A_ij, loop series B_i, their
// log-product S over all pairs and vertices, and the weight F(M) a single
// signature matrix receives (so that sum_M F(M) = S and F(empty) = 1).  The
// closed form of log S is the negated exponential factor of the general
// estimate; `direct` evaluates the series themselves.
double pair_series(Degree di, Degree dj, long long m1);
double loop_series(Degree d, long long m1);
double log_s_direct(const DegreeSequence& d, int threads = 0);
double log_s_closed(const DegreeSequence& d, int threads = 0);
double f_of_signature(const DegreeSequence& d, const SignatureMatrix& m);

// Normalized masses of one entry of the independent model; index m holds
// P(X = m).  For a pair, index 0 is the no-heavy-entry mass and index 1 is
// identically 0 (single edges are not heavy); for a loop, index 0 is the
// no-loop mass.  Masses sum to 1 up to rounding.
std::vector<double> pair_masses(Degree di, Degree dj, long long m1);
std::vector<double> loop_masses(Degree d, long long m1);

}  // namespace degseq
