#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degseq/core.hpp"

namespace degseq {

// A rewiring that removes the m parallel i-j pairs of a pairing.  targets[g]
// is the g-th i-j pair as (point in i, point in j); aux[g] is the g-th
// auxiliary pair in its chosen endpoint order.  The rewiring replaces
// {t.first, t.second} and {x.first, x.second} by {t.first, x.first} and
// {t.second, x.second}.
struct MultiEdgeSwitch {
    int i = 0, j = 0;
    std::vector<std::pair<std::int32_t, std::int32_t>> targets;
    std::vector<std::pair<std::int32_t, std::int32_t>> aux;
};

// The inverse rewiring: creates m parallel i-j pairs in a pairing that has
// none.  picks_i/picks_j are the chosen points; the pairs they currently sit
// in are broken, the picked points are joined to each other, and their old
// mates are joined pairwise.
struct InverseMultiSwitch {
    int i = 0, j = 0;
    std::vector<std::int32_t> picks_i;
    std::vector<std::int32_t> picks_j;
};

// Removes all m loops at vertex i.  loops[g] = the g-th loop's points in
// their chosen order; aux1/aux2 are the two lots of auxiliary pairs.  The
// rewiring replaces {l.first, l.second}, {x.first, x.second},
// {y.first, y.second} by {l.first, x.first}, {l.second, y.second},
// {x.second, y.first}.
struct LoopSwitch {
    int i = 0;
    std::vector<std::pair<std::int32_t, std::int32_t>> loops;
    std::vector<std::pair<std::int32_t, std::int32_t>> aux1;
    std::vector<std::pair<std::int32_t, std::int32_t>> aux2;
};

// The inverse: creates m loops at i (which currently has none).  picks holds
// 2m distinct points of i (pick 2g-2, 2g-1 become loop g); aux[g] is the
// g-th auxiliary pair, first endpoint joining the mate of pick 2g-2's side.
struct InverseLoopSwitch {
    int i = 0;
    std::vector<std::int32_t> picks;
    std::vector<std::pair<std::int32_t, std::int32_t>> aux;
};

// Result of applying a switch.  `violations` holds the labels of every
// failed goodness condition in canonical order ("i".."v" forward multi,
// "vi".."ix" inverse multi, "a".."c" forward loop, "d".."e" inverse loop).
// `good` means no violations.  `effective` is the semantic class test: the
// rewired pairing lands exactly in the intended target class (signature
// bookkeeping for multi-edge switches, loop counts for loop switches).
// `result` is absent only when the rewiring itself is ill-defined (an
// inverse-multi pick whose mate is also picked).
struct SwitchOutcome {
    std::optional<Pairing> result;
    std::vector<std::string> violations;
    bool good = false;
    bool effective = false;
};

// Apply the four operations.  Structural inconsistencies between the spec
// and the pairing (wrong bins, points not actually paired as claimed,
// duplicate or overlapping choices, targets not covering all i-j pairs,
// existing i-j pairs before an inverse multi, loops at i before an inverse
// loop) throw SwitchMismatch; well-formed but bad choices come back with
// violation labels instead.
SwitchOutcome forward_multi(const Pairing& p, const MultiEdgeSwitch& s);
SwitchOutcome inverse_multi(const Pairing& p, const InverseMultiSwitch& s);
SwitchOutcome forward_loop(const Pairing& p, const LoopSwitch& s);
SwitchOutcome inverse_loop(const Pairing& p, const InverseLoopSwitch& s);

// The spec of the opposite direction induced by an application.  For a
// forward switch applied to P yielding P', induced_inverse(s) applied to P'
// reproduces P; for an inverse switch applied to P' yielding P,
// induced_forward(P', s) applied to P reproduces P' (the pairing argument is
// the one the inverse was applied to, so old mates can be recovered).
InverseMultiSwitch induced_inverse(const MultiEdgeSwitch& s);
MultiEdgeSwitch induced_forward(const Pairing& inverse_source, const InverseMultiSwitch& s);
InverseLoopSwitch induced_inverse(const LoopSwitch& s);
LoopSwitch induced_forward(const Pairing& inverse_source, const InverseLoopSwitch& s);

// All labeled switch specs applicable to p (every target ordering, every
// ordered auxiliary selection, every endpoint orientation).  Only
// structurally well-formed specs are produced.
std::vector<MultiEdgeSwitch> enumerate_forward_multi(const Pairing& p, int i, int j);
std::vector<InverseMultiSwitch> enumerate_inverse_multi(const Pairing& p, int i, int j,
                                                        int m);
std::vector<LoopSwitch> enumerate_forward_loop(const Pairing& p, int i);
std::vector<InverseLoopSwitch> enumerate_inverse_loop(const Pairing& p, int i, int m);

// Exhaustive class-size ratio |C(M(m))| / |C(M(0))| for the classes that
// agree with `rest` away from entry (i, j), against the leading-order
// prediction [d_i]_m [d_j]_m / (m! M1^m).  c_star = c_0 + c_1 counts the
// pairings whose (i, j) entry is not heavy.
struct CensusRatioReport {
    int i = 0, j = 0;
    long long m = 0;
    long long c_m = 0;
    long long c_0 = 0;
    long long c_1 = 0;
    long long c_star = 0;
    double rho = 0.0;
    double prediction = 0.0;
};

CensusRatioReport census_ratio(const DegreeSequence& d, int i, int j, long long m,
                               const SignatureMatrix& rest = {});

}  // namespace degseq
