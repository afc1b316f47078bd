#pragma once

#include <string>
#include <vector>

#include "degseq/core.hpp"

namespace degseq {

struct CheckLine {
    std::string suite;
    std::string name;
    bool ok = true;
    std::string detail;  // first counterexample or observed constants
};

// Every degree sequence (non-increasing, positive parts) with even total
// degree between 2 and max_m1 — i.e. the partitions of the even numbers up
// to max_m1.  The exhaustive universe for all desk-scale batteries.
std::vector<DegreeSequence> all_sequences_up_to(long long max_m1);

// Each suite returns one aggregated line per property; a line's detail names
// the first counterexample when it fails.
std::vector<CheckLine> verify_moments(long long max_m1 = 12);
std::vector<CheckLine> verify_switching(long long max_m1 = 10);
std::vector<CheckLine> verify_s_formula();
std::vector<CheckLine> verify_omega_star();
std::vector<CheckLine> verify_oracle(long long max_m1 = 12);

// The exact-arithmetic inequality battery for one sequence: every global and
// split bound the error functionals must satisfy, evaluated in rational
// arithmetic (no rounding), over a set of split points.
std::vector<CheckLine> verify_bounds(const DegreeSequence& d);

bool all_ok(const std::vector<CheckLine>& lines);

}  // namespace degseq
