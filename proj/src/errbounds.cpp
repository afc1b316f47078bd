#include "degseq/errbounds.hpp"

#include <cmath>
#include <map>

namespace degseq {

namespace {

double dbl(const cpp_int& x) { return x.convert_to<double>(); }
double dbl(const cpp_rational& x) { return x.convert_to<double>(); }

void finish(BoundPart& part) {
    part.value = 0.0;
    for (const auto& [name, v] : part.terms) part.value += v;
}

}  // namespace

long long default_split_point(const DegreeSequence& d) {
    if (d.n() < 2) return 0;
    long long count = 0;
    while (count < d.n() && d[count] * d[count] > d.m1()) ++count;
    return std::min(std::max<long long>(count, 1), d.n() - 1);
}

XiReport xi_report(const DegreeSequence& d, std::optional<long long> h_opt, double slack) {
    XiReport rep;
    rep.slack = slack;

    const MomentProfile mom = moments(d, 4);
    const double m1 = dbl(mom.M[1]), m2 = dbl(mom.M[2]), m3 = dbl(mom.M[3]), m4 = dbl(mom.M[4]);
    const double delta = static_cast<double>(mom.delta);

    std::array<double, 8> u{};
    if (d.n() <= 10000) {
        auto ue = u_functionals_exact(d);
        for (int i = 1; i <= 7; ++i) u[i] = dbl(ue[i]);
    } else {
        u = u_functionals_double(d);
    }

    rep.general.name = "xi_general";
    rep.general.terms = {{"U5", u[5]},
                         {"U1/M1", u[1] / m1},
                         {"U2^2/M1", u[2] * u[2] / m1},
                         {"U3/M1", u[3] / m1},
                         {"U4*M2/M1^2", u[4] * m2 / (m1 * m1)},
                         {"U2*M2^2/M1^3", u[2] * m2 * m2 / (m1 * m1 * m1)},
                         {"M2/M1^2", m2 / (m1 * m1)},
                         {"M2*M3/M1^3", m2 * m3 / (m1 * m1 * m1)},
                         {"M2^3/M1^4", m2 * m2 * m2 / (m1 * m1 * m1 * m1)}};
    finish(rep.general);

    const bool delta_small = delta <= slack * std::sqrt(m1);

    rep.lemma_a.name = "xi_lemma_a";
    rep.lemma_a.terms = {{"M2/M1^2", m2 / (m1 * m1)},
                         {"M3/M1^2", m3 / (m1 * m1)},
                         {"M2^2*M3/M1^4", m2 * m2 * m3 / std::pow(m1, 4)},
                         {"M2^3/M1^4", m2 * m2 * m2 / std::pow(m1, 4)},
                         {"M2^4/M1^5", std::pow(m2, 4) / std::pow(m1, 5)},
                         {"M2*M3*M4/M1^5", m2 * m3 * m4 / std::pow(m1, 5)}};
    finish(rep.lemma_a);

    rep.lemma_b = rep.lemma_a;
    rep.lemma_b.name = "xi_lemma_b";
    rep.lemma_b.terms.pop_back();  // Delta <= sqrt(M1) drops the M2*M3*M4 term
    finish(rep.lemma_b);
    rep.lemma_b.applicable = delta_small;
    rep.lemma_b.notes.push_back("requires Delta <= slack*sqrt(M1)");

    const double m2s = m2 + m1, m3s = m3 + m1;
    rep.cor_star.name = "xi_cor_star";
    rep.cor_star.terms = {{"M3s*M2s^2/M1^4", m3s * m2s * m2s / std::pow(m1, 4)},
                          {"M4*M3*M2/M1^5", m4 * m3 * m2 / std::pow(m1, 5)}};
    finish(rep.cor_star);

    rep.cor_star_b.name = "xi_cor_star_b";
    rep.cor_star_b.terms = {rep.cor_star.terms.front()};
    finish(rep.cor_star_b);
    rep.cor_star_b.applicable = delta_small;
    rep.cor_star_b.notes.push_back("requires Delta <= slack*sqrt(M1)");

    rep.theta.name = "xi_theta";
    rep.theta.terms = {{"M3*M2^2/M1^4", m3 * m2 * m2 / std::pow(m1, 4)}};
    finish(rep.theta);
    rep.theta.applicable = delta_small && m1 <= slack * m2 && m1 <= slack * m3;
    rep.theta.notes.push_back("requires Delta <= slack*sqrt(M1), M1 <= slack*M2, M1 <= slack*M3");
    if (rep.theta.value > 0)
        rep.theta.notes.push_back("xi_general/xi_theta = " +
                                  std::to_string(rep.general.value / rep.theta.value));

    const long long h = h_opt.value_or(default_split_point(d));
    rep.h_used = h;
    const bool h_valid = h >= 1 && h < d.n();

    rep.split.name = "xi_split";
    rep.split_large.name = "xi_split_large";
    rep.split_large_b.name = "xi_split_large_b";
    if (h_valid) {
        const SplitMoments sp = split(d, h);
        const double h1 = dbl(sp.H[1]), h2 = dbl(sp.H[2]), h4 = dbl(sp.H[4]);
        const double l2 = dbl(sp.L[2]), l3 = dbl(sp.L[3]), l4 = dbl(sp.L[4]);
        rep.split.terms = {{"H1/M1", h1 / m1},
                           {"H1^3/M1^2", h1 * h1 * h1 / (m1 * m1)},
                           {"M2/M1^2", m2 / (m1 * m1)},
                           {"L3/M1^2", l3 / (m1 * m1)},
                           {"H1*H2*M2/M1^3", h1 * h2 * m2 / std::pow(m1, 3)},
                           {"M2*M3/M1^3", m2 * m3 / std::pow(m1, 3)},
                           {"L2*M2^2/M1^4", l2 * m2 * m2 / std::pow(m1, 4)},
                           {"L2*M2*M3/M1^4", l2 * m2 * m3 / std::pow(m1, 4)},
                           {"M2^3*L2/M1^5", m2 * m2 * m2 * l2 / std::pow(m1, 5)},
                           {"M2*M3*L4/M1^5", m2 * m3 * l4 / std::pow(m1, 5)},
                           {"L2*L3*H4/M1^5", l2 * l3 * h4 / std::pow(m1, 5)}};
        finish(rep.split);

        rep.split_large.terms = {{"H1*H2^2/M1^3", h1 * h2 * h2 / std::pow(m1, 3)},
                                 {"M2*M3/M1^3", m2 * m3 / std::pow(m1, 3)},
                                 {"L2*M2*M3/M1^4", l2 * m2 * m3 / std::pow(m1, 4)},
                                 {"L2*L3*H4/M1^5", l2 * l3 * h4 / std::pow(m1, 5)}};
        finish(rep.split_large);
        const double dh = static_cast<double>(d[h - 1]);      // h-th largest (1-based h)
        const double dh1 = static_cast<double>(d[h]);         // (h+1)-th
        rep.split_large.applicable =
            dh * slack >= std::sqrt(m1) && dh1 <= slack * std::sqrt(m1);
        rep.split_large.notes.push_back("requires d_h >= sqrt(M1) >= d_{h+1}");

        rep.split_large_b = rep.split_large;
        rep.split_large_b.name = "xi_split_large_b";
        rep.split_large_b.terms.erase(rep.split_large_b.terms.begin() + 1);
        finish(rep.split_large_b);
        rep.split_large_b.applicable =
            rep.split_large.applicable && l2 * slack >= m1;
        rep.split_large_b.notes.push_back("additionally requires L2 >= M1");
    } else {
        rep.split.applicable = false;
        rep.split_large.applicable = false;
        rep.split_large_b.applicable = false;
        rep.split.notes.push_back("no split point with 1 <= h < n");
    }
    return rep;
}

Method method_from_string(const std::string& s) {
    if (s == "general") return Method::general;
    if (s == "m2") return Method::m2;
    if (s == "powerlaw") return Method::powerlaw;
    if (s == "bivalued") return Method::bivalued;
    if (s == "longtail") return Method::longtail;
    throw InvalidInput("unknown method: " + s);
}

std::string method_name(Method m) {
    switch (m) {
        case Method::general: return "general";
        case Method::m2: return "m2";
        case Method::powerlaw: return "powerlaw";
        case Method::bivalued: return "bivalued";
        case Method::longtail: return "longtail";
    }
    return "?";
}

MethodHypotheses method_hypotheses(const DegreeSequence& d, Method method,
                                   const MethodParams& params, double slack) {
    MethodHypotheses out;
    out.method = method;
    const double n = static_cast<double>(d.n());
    const double m1 = static_cast<double>(d.m1());

    auto check = [&out](std::string name, bool ok, double lhs, double rhs,
                        std::string detail = {}, bool fatal = true) {
        out.checks.push_back({std::move(name), ok, fatal, lhs, rhs, std::move(detail)});
        if (fatal && !ok) out.all_ok = false;
    };
    auto need = [&params](const std::optional<double>& p, const char* flag) {
        if (!p) throw InvalidInput(std::string("method requires parameter ") + flag);
        return *p;
    };

    switch (method) {
        case Method::general: {
            out.case_tag = "general";
            XiReport rep = xi_report(d, std::nullopt, slack);
            out.xi = rep.general.value;
            out.xi_terms = rep.general.terms;
            break;
        }
        case Method::m2: {
            out.case_tag = "m2";
            const MomentProfile mom = moments(d, 2);
            const double m2 = mom.M[2].convert_to<double>();
            check("M2 <= slack * M1^(9/8)", m2 <= slack * std::pow(m1, 9.0 / 8.0), m2,
                  slack * std::pow(m1, 9.0 / 8.0));
            out.xi_terms = {{"M2^4/M1^(9/2)", std::pow(m2, 4) / std::pow(m1, 4.5)},
                            {"M2^(3/2)/M1^2", std::pow(m2, 1.5) / (m1 * m1)},
                            {"1/M1", 1.0 / m1}};
            break;
        }
        case Method::powerlaw: {
            const double gamma = need(params.gamma, "--gamma");
            out.case_tag = "powerlaw";
            check("gamma > 5/2", gamma > 2.5, gamma, 2.5);
            const DegreeHistogram hist = histogram(d);
            double c_density = 0.0;
            for (std::size_t a = 0; a < hist.size(); ++a) {
                double ratio = static_cast<double>(hist.count[a]) *
                               std::pow(static_cast<double>(hist.value[a]), gamma) / n;
                c_density = std::max(c_density, ratio);
            }
            check("density constant C = max_i n_i i^gamma / n", true, c_density, 0.0,
                  "reported, not enforced", false);
            const MomentProfile mom = moments(d, 3);
            const double m2s = mom.M[2].convert_to<double>() + m1;
            const double m3s = mom.M[3].convert_to<double>() + m1;
            const double rel = m2s * std::sqrt(m3s) / (m1 * m1);
            out.xi_terms = {{"(M2s*sqrt(M3s)/M1^2)^2", rel * rel}};
            break;
        }
        case Method::bivalued: {
            const DegreeHistogram hist = histogram(d);
            check("at most two distinct degree values", hist.size() <= 2,
                  static_cast<double>(hist.size()), 2.0);
            const double dmax = static_cast<double>(d.max_degree());
            const double dmin = static_cast<double>(d.min_degree());
            const double ell = static_cast<double>(hist.count.front());  // degree-Delta count
            check("min degree >= 3", d.min_degree() >= 3, dmin, 3.0);
            const bool case_a = dmax <= slack * std::sqrt(dmin * n + dmax * ell);
            const bool case_b = dmax * slack >= std::sqrt(dmin * n);
            check("case (a): Delta <= slack*sqrt(delta*n + Delta*ell)", case_a, dmax,
                  slack * std::sqrt(dmin * n + dmax * ell), "", false);
            check("case (b): Delta >= sqrt(delta*n)/slack (proxy for Omega)", case_b, dmax,
                  std::sqrt(dmin * n) / slack, "literal proxy for an Omega() hypothesis", false);
            check("case (a) or case (b) applies", case_a || case_b, 0.0, 0.0);
            const double xi_a = (std::pow(dmax, 7) * std::pow(ell, 3) +
                                 std::pow(dmax, 3) * std::pow(dmin, 4) * n * n * ell +
                                 std::pow(dmin, 7) * std::pow(n, 3)) /
                                (std::pow(dmin, 4) * std::pow(n, 4) +
                                 std::pow(dmax, 4) * std::pow(ell, 4));
            const double xi_b = std::pow(dmax, 5) * std::pow(ell, 3) /
                                    (std::pow(dmin, 3) * std::pow(n, 3)) +
                                std::pow(dmax, 5) * ell * ell / (dmin * dmin * std::pow(n, 3)) +
                                std::pow(dmin, 3) / n + std::pow(dmax, 3) * ell / (n * n);
            if (case_a && (!case_b || xi_a <= xi_b)) {
                out.case_tag = "bivalued-a";
                out.xi_terms = {{"xi_a", xi_a}};
            } else if (case_b) {
                out.case_tag = "bivalued-b";
                out.xi_terms = {{"xi_b", xi_b}};
            } else {
                out.case_tag = "bivalued-none";
                out.xi_terms = {{"xi_a (inapplicable)", xi_a}};
            }
            break;
        }
        case Method::longtail: {
            const double gamma = need(params.gamma, "--gamma");
            const double alpha = need(params.alpha, "--alpha");
            const double beta = need(params.beta, "--beta");
            check("1 < gamma < 3", gamma > 1.0 && gamma < 3.0, gamma, 3.0);
            check("gamma != 2", gamma != 2.0, gamma, 2.0);
            check("alpha > 1/2", alpha > 0.5, alpha, 0.5);
            const double beta_limit =
                gamma > 2.0 ? (3.0 - 5.0 * alpha) / (1.0 + 6.0 / gamma)
                            : (3.0 - 5.0 * alpha) * gamma / 8.0;
            check("0 < beta < beta_limit", beta > 0.0 && beta < beta_limit, beta, beta_limit);

            // Report the literal band-count constant and the largest small
            // coordinate (the "bounded" part of the definition).
            const double na = std::pow(n, alpha);
            std::map<long long, long long> band_count;
            double largest_bounded = 0.0;
            for (long long i = 0; i < d.n(); ++i) {
                double v = static_cast<double>(d[i]);
                if (v < na)
                    largest_bounded = std::max(largest_bounded, v);
                else
                    ++band_count[static_cast<long long>(v / na)];
            }
            double c_band = 0.0;
            for (const auto& [band, count] : band_count)
                c_band = std::max(c_band, static_cast<double>(count) *
                                              std::pow(static_cast<double>(band), gamma) /
                                              std::pow(n, beta));
            check("band constant C = max_i count_i i^gamma / n^beta", true, c_band, 0.0,
                  "reported, not enforced", false);
            check("largest bounded coordinate", true, largest_bounded, 0.0,
                  "coordinates below n^alpha", false);

            double exponent = gamma > 2.0 ? 5 * alpha + beta + 6 * beta / gamma - 3
                                          : 5 * alpha + 8 * beta / gamma - 3;
            out.case_tag = gamma > 2.0 ? "longtail-gamma-in-(2,3)" : "longtail-gamma-in-(1,2)";
            out.xi_terms = {{"n^exponent", std::pow(n, exponent)}};
            break;
        }
    }
    out.xi = 0.0;
    for (const auto& [name, v] : out.xi_terms) out.xi += v;
    return out;
}

}  // namespace degseq
