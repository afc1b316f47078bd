#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "degseq/core.hpp"
#include "degseq/errbounds.hpp"

namespace degseq {

enum class FamilyKind { regular, bivalued, powerlaw, strict_powerlaw, longtail };

FamilyKind family_from_string(const std::string& s);
std::string family_name(FamilyKind k);

// What to do when the raw family has odd total degree.
enum class ParityPolicy { increment_min, drop_vertex, reject };

ParityPolicy parity_from_string(const std::string& s);
std::string parity_name(ParityPolicy p);

struct FamilySpec {
    FamilyKind kind = FamilyKind::regular;
    long long n = 0;          // scale parameter (vertex count for most kinds)
    long long degree = 3;     // regular
    long long delta_small = 3, delta_big = 3, ell = 0;  // bivalued
    double gamma = 3.0;       // powerlaw / strict_powerlaw / longtail
    double c = 1.0;           // powerlaw envelope constant
    double alpha = 0.6, beta = 0.1;  // longtail
    std::uint64_t seed = 0;   // reserved for randomized variants
    ParityPolicy parity = ParityPolicy::increment_min;
};

struct GenResult {
    DegreeSequence d;
    bool parity_adjusted = false;
};

// Deterministic construction of each family:
//  - regular: n vertices of the given degree.
//  - bivalued: ell vertices of delta_big, n - ell of delta_small.
//  - powerlaw: floor(c * i^-gamma * n) vertices of degree i, i = 1..floor(n^(1/gamma)).
//  - strict_powerlaw: same but at least one vertex of every degree up to the cap.
//  - longtail: floor(n^beta * i^-gamma) coordinates of value ceil(i * n^alpha)
//    (the i-th band's lower endpoint) while that count is positive, then
//    degree-1 filler up to n coordinates.
// An odd total is repaired per the parity policy before validation.
GenResult generate(const FamilySpec& spec);

struct ConformanceReport {
    bool conforms = true;
    std::vector<HypCheck> checks;  // literal counting conditions, explicit constants
};

// Re-derives the family's defining counting conditions from the sequence
// itself (envelope per degree value or per band, with a +1 slack for the
// parity repair) and reports the observed constants.
ConformanceReport validate_family(const DegreeSequence& d, const FamilySpec& spec);

}  // namespace degseq
