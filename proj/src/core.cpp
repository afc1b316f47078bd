#include "degseq/core.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>

namespace degseq {

long long validate_sequence(const std::vector<Degree>& d) {
    if (d.empty()) throw EmptySequence();
    long long total = 0;
    for (Degree v : d) {
        if (v <= 0) throw NonPositiveDegree(v);
        total += v;
    }
    if (total % 2 != 0) throw OddTotalDegree(total);
    return total;
}

DegreeSequence::DegreeSequence(std::vector<Degree> degrees) : d_(std::move(degrees)) {
    m1_ = validate_sequence(d_);
    std::sort(d_.begin(), d_.end(), std::greater<Degree>());
}

Pairing pairing_layout(const DegreeSequence& d) {
    Pairing p;
    p.bin_start.resize(d.n() + 1);
    p.bin_start[0] = 0;
    for (long long v = 0; v < d.n(); ++v)
        p.bin_start[v + 1] = p.bin_start[v] + static_cast<std::int32_t>(d[v]);
    p.bin_of.resize(d.m1());
    for (long long v = 0; v < d.n(); ++v)
        for (std::int32_t q = p.bin_start[v]; q < p.bin_start[v + 1]; ++q)
            p.bin_of[q] = static_cast<std::int32_t>(v);
    p.mate.assign(d.m1(), -1);
    return p;
}

Multigraph to_multigraph(const Pairing& p) {
    Multigraph g;
    g.n = p.n();
    for (std::int32_t q = 0; q < p.points(); ++q) {
        if (p.mate[q] <= q) continue;  // visit each pair once
        int u = p.bin_of[q], v = p.bin_of[p.mate[q]];
        if (u > v) std::swap(u, v);
        ++g.mult[{u, v}];
    }
    return g;
}

SignatureMatrix signature_of(const Pairing& p) {
    SignatureMatrix m;
    Multigraph g = to_multigraph(p);
    for (const auto& [edge, count] : g.mult) {
        if (edge.first == edge.second)
            m.loops[edge.first] = count;
        else if (count >= 2)
            m.multis[edge] = count;
    }
    return m;
}

void validate_signature(const SignatureMatrix& m, long long n) {
    for (const auto& [edge, count] : m.multis) {
        auto [i, j] = edge;
        if (i < 0 || j < 0 || i >= n || j >= n)
            throw InvalidSignature("vertex out of range in entry (" + std::to_string(i) + "," +
                                   std::to_string(j) + ")");
        if (i >= j) throw InvalidSignature("off-diagonal key must have i < j");
        if (count < 2)
            throw InvalidSignature("off-diagonal multiplicity " + std::to_string(count) +
                                   " < 2 at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    for (const auto& [i, count] : m.loops) {
        if (i < 0 || i >= n)
            throw InvalidSignature("loop vertex " + std::to_string(i) + " out of range");
        if (count < 1) throw InvalidSignature("loop count < 1 at vertex " + std::to_string(i));
    }
}

void validate_signature(const SignatureMatrix& m, const DegreeSequence& d) {
    validate_signature(m, d.n());
    for (const auto& [edge, count] : m.multis) {
        auto [i, j] = edge;
        if (count > std::min(d[i], d[j]))
            throw InvalidSignature("multiplicity " + std::to_string(count) + " at (" +
                                   std::to_string(i) + "," + std::to_string(j) +
                                   ") exceeds a degree");
    }
    for (const auto& [i, count] : m.loops)
        if (2 * count > d[i])
            throw InvalidSignature("loop count " + std::to_string(count) + " at vertex " +
                                   std::to_string(i) + " needs degree >= " +
                                   std::to_string(2 * count));
}

bool is_simple(const Pairing& p) {
    std::vector<std::uint64_t> edges;
    edges.reserve(p.points() / 2);
    for (std::int32_t q = 0; q < p.points(); ++q) {
        if (p.mate[q] <= q) continue;
        std::uint32_t u = p.bin_of[q], v = p.bin_of[p.mate[q]];
        if (u == v) return false;  // loop
        if (u > v) std::swap(u, v);
        edges.push_back((static_cast<std::uint64_t>(u) << 32) | v);
    }
    std::sort(edges.begin(), edges.end());
    return std::adjacent_find(edges.begin(), edges.end()) == edges.end();
}

std::vector<Degree> read_sequence(std::istream& in) {
    std::vector<Degree> d;
    std::string line;
    long long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(a, b - a + 1);
        try {
            std::size_t used = 0;
            long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            d.push_back(v);
        } catch (const std::exception&) {
            throw InvalidInput("line " + std::to_string(lineno) + ": expected an integer, got '" +
                               tok + "'");
        }
    }
    return d;
}

std::vector<Degree> read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open sequence file: " + path);
    return read_sequence(in);
}

void write_sequence_file(const std::string& path, const std::vector<Degree>& d) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot open output file: " + path);
    for (Degree v : d) out << v << '\n';
    if (!out) throw InvalidInput("failed writing " + path);
}

}  // namespace degseq
