#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "degseq/errors.hpp"

namespace degseq {

using Degree = long long;

// Validated degree sequence, stored sorted non-increasing (d[0] >= d[1] >= ...).
// All positional APIs in the library (lambda, head/tail splits, signature
// vertex ids) refer to this sorted order, 0-based.
class DegreeSequence {
  public:
    explicit DegreeSequence(std::vector<Degree> degrees);

    long long n() const { return static_cast<long long>(d_.size()); }
    long long m1() const { return m1_; }
    Degree max_degree() const { return d_.front(); }
    Degree min_degree() const { return d_.back(); }
    Degree operator[](std::size_t i) const { return d_[i]; }
    const std::vector<Degree>& degrees() const { return d_; }

  private:
    std::vector<Degree> d_;
    long long m1_ = 0;
};

// Throws EmptySequence / NonPositiveDegree / OddTotalDegree; returns the total
// degree on success.  DegreeSequence's constructor calls this.
long long validate_sequence(const std::vector<Degree>& d);

// Perfect matching on M1 points.  Vertex v owns the contiguous point range
// [bin_start[v], bin_start[v+1]).
struct Pairing {
    std::vector<std::int32_t> mate;       // involution without fixed points
    std::vector<std::int32_t> bin_of;     // point -> vertex
    std::vector<std::int32_t> bin_start;  // size n+1

    long long points() const { return static_cast<long long>(mate.size()); }
    long long n() const { return static_cast<long long>(bin_start.size()) - 1; }
    Degree degree(int v) const { return bin_start[v + 1] - bin_start[v]; }
};

// Empty pairing skeleton (mate filled with -1) for the given sequence.
Pairing pairing_layout(const DegreeSequence& d);

// Multiplicity matrix of the multigraph induced by a pairing.  Key (u,v) with
// u <= v; the diagonal counts loops (pairs with both points in one bin).
struct Multigraph {
    long long n = 0;
    std::map<std::pair<int, int>, long long> mult;

    long long multiplicity(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = mult.find({u, v});
        return it == mult.end() ? 0 : it->second;
    }
};

Multigraph to_multigraph(const Pairing& p);

// Off-diagonal entries >= 2 (parallel classes) plus diagonal loop counts >= 1.
// Absent off-diagonal = "either 0 or 1 edge" (the wildcard); absent diagonal
// = no loops.  Default ordering makes it usable as a census key.
struct SignatureMatrix {
    std::map<std::pair<int, int>, long long> multis;  // i<j -> m_ij >= 2
    std::map<int, long long> loops;                   // i -> m_ii >= 1

    bool empty() const { return multis.empty() && loops.empty(); }
    long long multi(int i, int j) const {
        if (i > j) std::swap(i, j);
        auto it = multis.find({i, j});
        return it == multis.end() ? 0 : it->second;
    }
    long long loop(int i) const {
        auto it = loops.find(i);
        return it == loops.end() ? 0 : it->second;
    }
    auto operator<=>(const SignatureMatrix&) const = default;
};

SignatureMatrix signature_of(const Pairing& p);

// Throws InvalidSignature unless all entries are in range for n vertices,
// off-diagonal values are >= 2 with i < j, and loop counts are >= 1.
void validate_signature(const SignatureMatrix& m, long long n);

// Additionally requires entries to be realizable by the degrees:
// m_ij <= min(d_i, d_j) and 2*m_ii <= d_i.
void validate_signature(const SignatureMatrix& m, const DegreeSequence& d);

// True iff the pairing induces a simple graph: no loops, no parallel pairs.
bool is_simple(const Pairing& p);

// Sequence file format: UTF-8 text, one positive decimal integer per line;
// blank lines and lines starting with '#' are ignored ('#' after the value
// starts a trailing comment).  Throws InvalidInput on anything else.
std::vector<Degree> read_sequence(std::istream& in);
std::vector<Degree> read_sequence_file(const std::string& path);
void write_sequence_file(const std::string& path, const std::vector<Degree>& d);

}  // namespace degseq
