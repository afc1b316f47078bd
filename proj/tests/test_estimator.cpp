#include <doctest.h>

#include <cmath>
#include <vector>

#include "degseq/core.hpp"
#include "degseq/errbounds.hpp"
#include "degseq/errors.hpp"
#include "degseq/estimator.hpp"
#include "degseq/verify.hpp"

using namespace degseq;

TEST_CASE("log of the matching count matches the odd product") {
    for (long long m1 : {2LL, 4LL, 6LL, 12LL, 40LL}) {
        double direct = 0.0;
        for (long long t = 1; t < m1; t += 2) direct += std::log(static_cast<double>(t));
        CHECK(log_phi(m1) == doctest::Approx(direct).epsilon(1e-12));
    }
    CHECK(log_phi(0) == 0.0);
    CHECK(sum_log_factorials(DegreeSequence({3, 2, 2, 1})) ==
          doctest::Approx(std::log(6.0) + std::log(2.0) + std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("heavy-entry factors: frozen anchors") {
    CHECK(pair_series(2, 2, 4) == doctest::Approx(1.0625).epsilon(1e-13));
    CHECK(loop_series(2, 4) == doctest::Approx(1.25).epsilon(1e-13));
    CHECK(std::exp(log_s_direct(DegreeSequence({2, 2}))) ==
          doctest::Approx(1.66015625).epsilon(1e-12));
}

TEST_CASE("masses: P(double edge) = 1/17 for d=(2,2)") {
    auto pm = pair_masses(2, 2, 4);
    REQUIRE(pm.size() == 3);
    CHECK(pm[1] == 0.0);
    CHECK(pm[2] == doctest::Approx(1.0 / 17.0).epsilon(1e-12));
    CHECK(pm[0] + pm[2] == doctest::Approx(1.0).epsilon(1e-12));

    auto lm = loop_masses(2, 4);
    REQUIRE(lm.size() == 2);
    CHECK(lm[0] == doctest::Approx(0.8).epsilon(1e-12));  // 1 / 1.25
    CHECK(lm[1] == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("F weight is 1 on the simple signature") {
    for (const auto& degs :
         std::vector<std::vector<Degree>>{{2, 2}, {3, 3, 2}, {4, 4, 3, 3, 2}}) {
        DegreeSequence d(degs);
        CHECK(f_of_signature(d, SignatureMatrix{}) == doctest::Approx(1.0).epsilon(1e-12));
    }
    DegreeSequence d({2, 2});
    SignatureMatrix dbl;
    dbl.multis[{0, 1}] = 2;
    // F(double edge) = ([2]_2 [2]_2 / (2 M1^2)) / (1 + lambda) = (4/32)/2 = 1/16.
    CHECK(f_of_signature(d, dbl) == doctest::Approx(0.0625).epsilon(1e-12));
    SignatureMatrix bad;
    bad.multis[{0, 1}] = 3;  // exceeds min degree
    CHECK_THROWS_AS(f_of_signature(d, bad), InvalidSignature);
}

TEST_CASE("breakdown sums to the estimate") {
    for (const auto& degs : std::vector<std::vector<Degree>>{
             {3, 3, 3, 3}, {5, 4, 4, 3, 2, 2}, {1, 1, 1, 1, 1, 1}}) {
        DegreeSequence d(degs);
        auto est = estimate_log_g(d, Method::general, {}, /*force=*/true);
        double sum = 0.0;
        for (const auto& [name, v] : est.breakdown) sum += v;
        CHECK(sum == doctest::Approx(est.log_g).epsilon(1e-12));
        CHECK(est.sqrt_xi == doctest::Approx(std::sqrt(est.xi)).epsilon(1e-12));
    }
}

TEST_CASE("perfect matchings: estimate vs exact log((n-1)!!) for d=1^n") {
    const long long n = 100;
    DegreeSequence d(std::vector<Degree>(n, 1));
    auto est = estimate_log_g(d, Method::general);
    double exact = 0.0;
    for (long long t = 1; t < n; t += 2) exact += std::log(static_cast<double>(t));
    CHECK(std::abs(est.log_g - exact) <= 0.05);
}

TEST_CASE("3-regular n=4: error within sqrt(xi) of the exact count") {
    DegreeSequence d({3, 3, 3, 3});
    auto est = estimate_log_g(d, Method::general, {}, /*force=*/true);
    // Exact g = 1, so log g = 0; the guaranteed scale is O(sqrt(xi)).
    CHECK(std::abs(est.log_g - 0.0) <= 1.0 * est.sqrt_xi);
}

TEST_CASE("hypothesis gate throws without --force") {
    std::vector<Degree> degs(6, 6);  // M2 well above M1^(9/8)
    DegreeSequence d(degs);
    CHECK_THROWS_AS(estimate_log_g(d, Method::m2), HypothesisViolation);
    CHECK_NOTHROW(estimate_log_g(d, Method::m2, {}, /*force=*/true));
    CHECK_THROWS_AS(estimate_log_g(d, Method::powerlaw), InvalidInput);  // missing gamma
}

TEST_CASE("specialized exponents differ from the general one as designed") {
    // Power-law route: no -M1/2 term, so on a sequence with few heavy pairs the
    // two must still yield comparable implied probabilities; sanity-check signs.
    DegreeSequence d(std::vector<Degree>(50, 2));
    MethodParams p;
    p.gamma = 2.6;
    auto gen = estimate_log_g(d, Method::general, {}, true);
    auto pl = estimate_log_g(d, Method::powerlaw, p, true);
    CHECK(std::isfinite(gen.log_g));
    CHECK(std::isfinite(pl.log_g));
}

TEST_CASE("direct and closed S agree increasingly well (small ladder)") {
    double prev = 1e300;
    for (long long n : {16LL, 32LL, 64LL}) {
        DegreeSequence d(std::vector<Degree>(n, 3));
        const double gap = std::abs(log_s_direct(d) - log_s_closed(d));
        CHECK(std::isfinite(gap));
        CHECK(gap < prev);
        prev = gap;
    }
}

TEST_CASE("s-formula invariant battery") {
    for (const auto& line : verify_s_formula()) {
        INFO(line.suite, ": ", line.name, " -- ", line.detail);
        CHECK(line.ok);
    }
}

TEST_CASE("omega-star invariant battery") {
    for (const auto& line : verify_omega_star()) {
        INFO(line.suite, ": ", line.name, " -- ", line.detail);
        CHECK(line.ok);
    }
}
