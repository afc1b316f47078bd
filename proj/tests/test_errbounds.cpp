#include <doctest.h>

#include <vector>

#include "degseq/bigint.hpp"
#include "degseq/core.hpp"
#include "degseq/errbounds.hpp"
#include "degseq/errors.hpp"
#include "degseq/moments.hpp"
#include "degseq/verify.hpp"

using namespace degseq;

TEST_CASE("exact inequality battery on hand-picked shapes") {
    for (const auto& degs : std::vector<std::vector<Degree>>{
             {2, 2},
             {3, 2, 2, 1},
             {5, 5, 4, 3, 3, 2},
             {3, 3, 3, 3, 3, 3, 3, 3},
             {9, 9, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3},
             {12, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}) {
        for (const auto& line : verify_bounds(DegreeSequence(degs))) {
            INFO(line.name, " -- ", line.detail);
            CHECK(line.ok);
        }
    }
}

TEST_CASE("exact inequality battery, exhaustive M1 <= 12, every split point") {
    for (const auto& d : all_sequences_up_to(12))
        for (const auto& line : verify_bounds(d)) {
            INFO(line.name, " -- ", line.detail);
            CHECK(line.ok);
        }
}

TEST_CASE("the U5 head/tail bound holds with margin at every split point") {
    // The battery's mixed term carries coefficient 2; exhaustively confirm the
    // bound itself (and hence the battery's tolerance-free pass) on small inputs.
    for (const auto& d : all_sequences_up_to(12)) {
        const auto u = u_functionals_exact(d, WRange::literal);
        const auto prof = moments(d, 4);
        const cpp_rational M1(prof.M[1]), M2(prof.M[2]);
        const cpp_rational M1_2 = M1 * M1, M1_4 = M1_2 * M1_2;
        for (long long h = 0; h <= d.n(); ++h) {
            const auto sp = split(d, h);
            const cpp_rational H1(sp.H[1]), H2(sp.H[2]), H3(sp.H[3]);
            const cpp_rational L2(sp.L[2]), L3(sp.L[3]);
            const cpp_rational two = L3 * M2 * M2 / M1_4 + H3 * L2 * L2 / M1_4 +
                                     2 * H2 * H1 * L2 / (M1_2 * M1) + H1 * H1 * H1 / M1_2;
            INFO("h=", h);
            CHECK(u[5] <= two);
        }
    }
}

TEST_CASE("xi report structure and gating") {
    SUBCASE("regular sequence: all moment routes applicable, split gated sensibly") {
        DegreeSequence d(std::vector<Degree>(20, 3));
        auto rep = xi_report(d);
        CHECK(rep.general.applicable);
        CHECK(rep.lemma_a.applicable);
        CHECK(rep.lemma_b.applicable);  // Delta = 3 <= sqrt(60)
        CHECK(rep.general.value > 0);
        CHECK(rep.lemma_a.value >= rep.lemma_b.value);  // lemma_b drops one term
        CHECK(rep.cor_star.applicable);
        CHECK(rep.theta.applicable);  // Delta <= sqrt(M1), M1 <= M2, M1 <= M3
        for (const auto* p : {&rep.general, &rep.lemma_a, &rep.split}) {
            double sum = 0;
            for (const auto& [name, v] : p->terms) sum += v;
            CHECK(sum == doctest::Approx(p->value).epsilon(1e-12));
        }
    }
    SUBCASE("one huge vertex: the sqrt(M1) cap disables the capped variants") {
        std::vector<Degree> degs(39, 1);
        degs[0] = 38;  // Delta = 38 > sqrt(M1 = 76) ~ 8.7
        DegreeSequence d(degs);
        auto rep = xi_report(d);
        CHECK(rep.lemma_a.applicable);
        CHECK(!rep.lemma_b.applicable);
        CHECK(!rep.cor_star_b.applicable);
        CHECK(!rep.theta.applicable);
    }
    SUBCASE("tiny n: split needs 1 <= h < n") {
        DegreeSequence d({1, 1});
        auto rep = xi_report(d, 1);
        CHECK(rep.h_used == 1);
    }
}

TEST_CASE("method hypotheses") {
    SUBCASE("m2 route on a near-regular sequence") {
        DegreeSequence d(std::vector<Degree>(100, 3));
        auto hyp = method_hypotheses(d, Method::m2);
        CHECK(hyp.all_ok);  // M2 = 600 <= M1^{9/8} = 300^{1.125} ~ 612
        CHECK(hyp.xi > 0);
    }
    SUBCASE("powerlaw requires gamma") {
        DegreeSequence d({3, 2, 2, 1});
        CHECK_THROWS_AS(method_hypotheses(d, Method::powerlaw), InvalidInput);
        MethodParams p;
        p.gamma = 2.6;
        CHECK_NOTHROW(method_hypotheses(d, Method::powerlaw, p));
    }
    SUBCASE("longtail requires gamma, alpha, beta in range") {
        DegreeSequence d({3, 2, 2, 1});
        MethodParams p;
        p.gamma = 2.5;
        CHECK_THROWS_AS(method_hypotheses(d, Method::longtail, p), InvalidInput);
        p.alpha = 0.6;
        p.beta = 0.05;
        auto hyp = method_hypotheses(d, Method::longtail, p);
        CHECK(!hyp.case_tag.empty());
    }
    SUBCASE("bivalued detects the two-valued shape") {
        std::vector<Degree> degs(10, 3);
        degs[0] = degs[1] = 7;
        auto hyp = method_hypotheses(DegreeSequence(degs), Method::bivalued);
        bool has_case = hyp.case_tag.find("bivalued") != std::string::npos;
        CHECK(has_case);
        auto bad = method_hypotheses(DegreeSequence({5, 4, 3, 2, 2}), Method::bivalued);
        CHECK(!bad.all_ok);  // not two-valued
    }
    SUBCASE("slack widens a failing comparison") {
        // Pick a shape where M2 > M1^{9/8} but within 10x of it.
        std::vector<Degree> degs(6, 6);
        DegreeSequence d(degs);  // M1=36, M2=180, M1^{9/8} ~ 56.6
        auto tight = method_hypotheses(d, Method::m2, {}, 1.0);
        auto loose = method_hypotheses(d, Method::m2, {}, 4.0);
        CHECK(!tight.all_ok);
        CHECK(loose.all_ok);
    }
}

TEST_CASE("default split point counts degrees above sqrt(M1)") {
    std::vector<Degree> degs(24, 2);
    degs[0] = 20;
    degs[1] = 14;  // M1 = 78, sqrt ~ 8.8: two head degrees
    DegreeSequence d(degs);
    CHECK(default_split_point(d) == 2);
    DegreeSequence reg(std::vector<Degree>(10, 3));
    CHECK(default_split_point(reg) >= 1);  // clamped into [1, n-1]
}
