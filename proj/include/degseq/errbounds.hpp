#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degseq/core.hpp"
#include "degseq/moments.hpp"

namespace degseq {

// One bound evaluation: the value, its additive terms (value == sum of
// terms), and whether this bound's side conditions hold for the sequence.
// Side conditions of asymptotic form ("Delta = O(sqrt(M1))") are checked as
// literal inequalities with a configurable slack factor.
struct BoundPart {
    std::string name;
    double value = 0.0;
    bool applicable = true;
    std::vector<std::pair<std::string, double>> terms;
    std::vector<std::string> notes;
};

struct XiReport {
    double slack = 1.0;
    long long h_used = 0;  // split point used by the head/tail bounds

    BoundPart general;        // the full xi driving the main estimate
    BoundPart lemma_a;        // moment-only bound, no side condition
    BoundPart lemma_b;        // shorter variant for Delta <= slack*sqrt(M1)
    BoundPart cor_star;       // M3*(M2*)^2/M1^4 + M4 M3 M2/M1^5
    BoundPart cor_star_b;     // first term only, Delta <= slack*sqrt(M1)
    BoundPart theta;          // M3 M2^2 / M1^4, two-sided regime
    BoundPart split;          // head/tail bound at h_used (any 1 <= h < n)
    BoundPart split_large;    // head/tail bound for d_h >= sqrt(M1) >= d_{h+1}
    BoundPart split_large_b;  // variant dropping M2 M3/M1^3 when L2 >= M1
};

// Smallest h >= 1 with d_{h+1} <= sqrt(M1) (i.e. the number of degrees
// exceeding sqrt(M1), clamped to [1, n-1]).  Returns 0 if n < 2.
long long default_split_point(const DegreeSequence& d);

XiReport xi_report(const DegreeSequence& d, std::optional<long long> h = std::nullopt,
                   double slack = 1.0);

// Specialized estimation methods and their hypothesis checks.
enum class Method { general, m2, powerlaw, bivalued, longtail };

Method method_from_string(const std::string& s);
std::string method_name(Method m);

struct MethodParams {
    std::optional<double> gamma;
    std::optional<double> alpha;
    std::optional<double> beta;
};

struct HypCheck {
    std::string name;    // the inequality, spelled out
    bool satisfied = true;
    bool fatal = true;   // informational entries (reported constants) are non-fatal
    double lhs = 0.0;
    double rhs = 0.0;
    std::string detail;
};

struct MethodHypotheses {
    Method method = Method::general;
    std::string case_tag;  // e.g. "bivalued-a", "longtail-gamma-in-(2,3)"
    bool all_ok = true;
    std::vector<HypCheck> checks;
    double xi = 0.0;
    std::vector<std::pair<std::string, double>> xi_terms;
};

// Evaluates the method's stated preconditions as literal inequalities (slack
// factor applied to every O/Omega-style comparison) and its error functional.
// Never throws on violated hypotheses; callers decide (the estimator throws
// HypothesisViolation unless forced).  Throws InvalidInput when a required
// parameter (gamma/alpha/beta) is missing.
MethodHypotheses method_hypotheses(const DegreeSequence& d, Method method,
                                   const MethodParams& params = {}, double slack = 1.0);

}  // namespace degseq
