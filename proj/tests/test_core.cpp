#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "degseq/core.hpp"
#include "degseq/errors.hpp"

using namespace degseq;

TEST_CASE("degree sequences are validated and sorted") {
    DegreeSequence d({1, 3, 2, 2});
    CHECK(d.n() == 4);
    CHECK(d.m1() == 8);
    CHECK(d[0] == 3);
    CHECK(d[3] == 1);
    CHECK(d.max_degree() == 3);
    CHECK(d.min_degree() == 1);

    CHECK_THROWS_AS(DegreeSequence({}), EmptySequence);
    CHECK_THROWS_AS(DegreeSequence({3, 0, 1}), NonPositiveDegree);
    CHECK_THROWS_AS(DegreeSequence({-2, 2}), NonPositiveDegree);
    CHECK_THROWS_AS(DegreeSequence({3, 2, 2}), OddTotalDegree);
}

TEST_CASE("pairing layout exposes contiguous bins") {
    DegreeSequence d({3, 2, 1});
    Pairing p = pairing_layout(d);
    CHECK(p.points() == 6);
    CHECK(p.n() == 3);
    CHECK(p.bin_start == std::vector<std::int32_t>{0, 3, 5, 6});
    CHECK(p.degree(0) == 3);
    CHECK(p.degree(2) == 1);
    CHECK(p.bin_of[0] == 0);
    CHECK(p.bin_of[3] == 1);
    CHECK(p.bin_of[5] == 2);
    for (auto m : p.mate) CHECK(m == -1);
}

namespace {

Pairing make_pairing(const DegreeSequence& d, const std::vector<std::pair<int, int>>& pairs) {
    Pairing p = pairing_layout(d);
    for (auto [a, b] : pairs) {
        p.mate[a] = static_cast<std::int32_t>(b);
        p.mate[b] = static_cast<std::int32_t>(a);
    }
    return p;
}

}  // namespace

TEST_CASE("multigraph and signature of hand-built pairings") {
    DegreeSequence d({2, 2});  // points 0,1 -> vertex 0; points 2,3 -> vertex 1

    SUBCASE("double edge") {
        Pairing p = make_pairing(d, {{0, 2}, {1, 3}});
        Multigraph g = to_multigraph(p);
        CHECK(g.multiplicity(0, 1) == 2);
        CHECK(g.multiplicity(0, 0) == 0);
        SignatureMatrix m = signature_of(p);
        CHECK(m.multi(0, 1) == 2);
        CHECK(m.loops.empty());
        CHECK(!is_simple(p));
    }
    SUBCASE("two loops") {
        Pairing p = make_pairing(d, {{0, 1}, {2, 3}});
        Multigraph g = to_multigraph(p);
        CHECK(g.multiplicity(0, 0) == 1);
        CHECK(g.multiplicity(1, 1) == 1);
        SignatureMatrix m = signature_of(p);
        CHECK(m.loop(0) == 1);
        CHECK(m.loop(1) == 1);
        CHECK(m.multis.empty());
        CHECK(!is_simple(p));
    }
    SUBCASE("simple path is simple") {
        DegreeSequence path({2, 1, 1});  // vertex 0 has points 0,1; then 2; then 3
        Pairing p = make_pairing(path, {{0, 2}, {1, 3}});
        CHECK(is_simple(p));
        CHECK(signature_of(p).empty());
    }
}

TEST_CASE("signature validation") {
    SignatureMatrix m;
    m.multis[{0, 1}] = 2;
    m.loops[2] = 1;
    CHECK_NOTHROW(validate_signature(m, 3));
    CHECK_THROWS_AS(validate_signature(m, 2), InvalidSignature);  // vertex 2 out of range

    SignatureMatrix bad;
    bad.multis[{1, 0}] = 2;  // not i < j
    CHECK_THROWS_AS(validate_signature(bad, 3), InvalidSignature);
    SignatureMatrix one;
    one.multis[{0, 1}] = 1;  // single edges are wildcards, not entries
    CHECK_THROWS_AS(validate_signature(one, 3), InvalidSignature);
    SignatureMatrix zl;
    zl.loops[0] = 0;
    CHECK_THROWS_AS(validate_signature(zl, 3), InvalidSignature);

    DegreeSequence d({4, 2, 2});
    SignatureMatrix cap;
    cap.multis[{0, 1}] = 3;  // exceeds min(4, 2)
    CHECK_THROWS_AS(validate_signature(cap, d), InvalidSignature);
    SignatureMatrix lp;
    lp.loops[1] = 2;  // needs degree >= 4
    CHECK_THROWS_AS(validate_signature(lp, d), InvalidSignature);
    SignatureMatrix ok;
    ok.multis[{0, 1}] = 2;
    ok.loops[0] = 2;
    CHECK_NOTHROW(validate_signature(ok, d));
}

TEST_CASE("signature ordering is usable as a census key") {
    SignatureMatrix a, b;
    a.multis[{0, 1}] = 2;
    b.multis[{0, 1}] = 3;
    CHECK(a == a);
    CHECK(a != b);
    CHECK((a < b || b < a));
}

TEST_CASE("sequence file round trip, comments, and errors") {
    std::istringstream good("# header\n3\n2  # trailing\n\n  2\n1\n");
    auto v = read_sequence(good);
    CHECK(v == std::vector<Degree>{3, 2, 2, 1});

    std::istringstream bad("3\ntwo\n");
    CHECK_THROWS_AS(read_sequence(bad), InvalidInput);

    const std::string path = "test_core_seq.tmp";
    write_sequence_file(path, {4, 3, 3, 2});
    auto back = read_sequence_file(path);
    CHECK(back == std::vector<Degree>{4, 3, 3, 2});
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_sequence_file("does_not_exist.degseq"), InvalidInput);
}
