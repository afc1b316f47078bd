#include <doctest.h>

#include "degseq/bigint.hpp"
#include "degseq/core.hpp"
#include "degseq/moments.hpp"
#include "degseq/verify.hpp"

using namespace degseq;

TEST_CASE("frozen profile for d=(3,2,2,1)") {
    DegreeSequence d({3, 2, 2, 1});
    auto prof = moments(d, 4);
    CHECK(prof.M[0] == 4);
    CHECK(prof.M[1] == 8);
    CHECK(prof.M[2] == 10);
    CHECK(prof.M[3] == 6);
    CHECK(prof.M[4] == 0);
    CHECK(prof.delta == 3);
    CHECK(prof.tau == 7);  // the Delta=3 largest degrees: 3+2+2

    auto hist = histogram(d);  // follows the sorted order: largest degree first
    REQUIRE(hist.size() == 3);
    CHECK(hist.value[0] == 3);
    CHECK(hist.count[0] == 1);
    CHECK(hist.value[1] == 2);
    CHECK(hist.count[1] == 2);
    CHECK(hist.value[2] == 1);
    CHECK(hist.count[2] == 1);
}

TEST_CASE("frozen U values and lambda for d=(3,2,2,1)") {
    DegreeSequence d({3, 2, 2, 1});
    auto u = u_functionals_exact(d, WRange::literal);
    CHECK(u[1] == cpp_rational(3, 4));
    CHECK(u[2] == cpp_rational(7, 16));
    CHECK(lambda(d, 0, 3) == cpp_rational(3, 8));
    CHECK(lambda(d, 1, 2) == cpp_rational(4, 8));

    auto ud = u_functionals_double(d, WRange::literal);
    CHECK(ud[1] == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(ud[2] == doctest::Approx(0.4375).epsilon(1e-12));
}

TEST_CASE("truncated falling factorials vanish below the order") {
    CHECK(falling<cpp_int>(1, 2) == 0);
    CHECK(falling<cpp_int>(3, 4) == 0);
    CHECK(falling<cpp_int>(4, 2) == 12);
    CHECK(falling_ll(5, 3) == 60);
    CHECK(falling_ll(0, 1) == 0);
}

TEST_CASE("head/tail split sums to the full moments") {
    DegreeSequence d({6, 5, 3, 3, 2, 1});
    auto prof = moments(d, 4);
    for (long long h = 0; h <= d.n(); ++h) {
        auto s = split(d, h);
        for (int k = 1; k <= 4; ++k) CHECK(s.H[k] + s.L[k] == prof.M[k]);
    }
    auto s2 = split(d, 2);
    CHECK(s2.H[1] == 11);       // 6 + 5
    CHECK(s2.H[2] == 50);       // 30 + 20
}

TEST_CASE("full inner range dominates the restricted one") {
    DegreeSequence d({5, 4, 4, 3, 2, 2});
    auto lit = u_functionals_exact(d, WRange::literal);
    auto str = u_functionals_exact(d, WRange::strict);
    for (int k = 1; k <= 7; ++k) CHECK(lit[k] >= str[k]);
    // Only the triple sums see the difference.
    CHECK(lit[2] == str[2]);
    CHECK(lit[4] == str[4]);
}

TEST_CASE("moments invariant battery, exhaustive M1 <= 10") {
    for (const auto& line : verify_moments(10)) {
        INFO(line.suite, ": ", line.name, " -- ", line.detail);
        CHECK(line.ok);
    }
}
