#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "degseq/bigint.hpp"
#include "degseq/core.hpp"

namespace degseq {

// Exhaustive enumeration is the ground truth everything else is tested
// against; it is hard-capped to keep it honest about its scale.
inline constexpr long long kMaxOraclePoints = 16;

// |Phi| = (m1-1)!! = m1! / (2^(m1/2) (m1/2)!), the number of perfect
// matchings on m1 labeled points.  Exact for even m1 >= 0.
cpp_int phi_exact(long long m1);

// prod_i d_i!
cpp_int factorial_product(const DegreeSequence& d);

// Visits every perfect matching of the point set exactly once, in the
// canonical order: always match the smallest unmatched point, trying mates in
// increasing point order.  Throws OracleTooLarge if m1 > kMaxOraclePoints.
void enumerate_pairings(const DegreeSequence& d,
                        const std::function<void(const Pairing&)>& visit);

using SignatureCensus = std::map<SignatureMatrix, long long>;

// Census of pairings by signature.  The parallel version splits on the mate
// of point 0 and merges branch censuses in ascending mate order; results are
// identical to the serial one (exact integer counts) for any thread count.
SignatureCensus census_serial(const DegreeSequence& d);
SignatureCensus census_parallel(const DegreeSequence& d, int threads = 0);

struct OracleReport {
    long long m1 = 0;
    cpp_int phi;                       // |Phi|
    cpp_int simple_pairings;           // pairings inducing a simple graph
    cpp_int g;                         // simple graphs = simple_pairings / prod d_i!
    cpp_rational p_simple;             // simple_pairings / phi
    std::optional<SignatureCensus> census;
};

OracleReport oracle_report(const DegreeSequence& d, bool with_census = false);

// E[f(P)] over the uniform pairing, as an exact rational.  f must fit in
// long long for every pairing (true for all the statistics used here).
cpp_rational exact_expectation(const DegreeSequence& d,
                               const std::function<long long(const Pairing&)>& f);

// Sum over all pairings of Y_{u,v} and [Y_{u,v}]_2 for every vertex pair
// u < v, in one pass; divide by phi for the expectations.
struct EdgeMomentSums {
    cpp_int phi;
    std::vector<std::vector<long long>> y_sum;   // n x n, upper triangle used
    std::vector<std::vector<long long>> y2_sum;  // sum of Y(Y-1)
};
EdgeMomentSums edge_moment_sums(const DegreeSequence& d);

// Independent second oracle: counts simple graphs with the given degree
// sequence directly, by placing each vertex's remaining edges into subsets of
// later vertices.  Shares no code with the pairing enumerator.
cpp_int count_simple_graphs(const DegreeSequence& d);

}  // namespace degseq
