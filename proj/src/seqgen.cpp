#include "degseq/seqgen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "degseq/errors.hpp"

namespace degseq {

namespace {

double beta_limit(double gamma, double alpha) {
    return gamma > 2 ? (3.0 - 5.0 * alpha) / (1.0 + 6.0 / gamma)
                     : (3.0 - 5.0 * alpha) * gamma / 8.0;
}

GenResult finalize(std::vector<Degree> raw, ParityPolicy policy) {
    if (raw.empty()) throw InvalidFamilyParams("family produced no vertices");
    long long total = std::accumulate(raw.begin(), raw.end(), 0LL);
    bool adjusted = false;
    if (total % 2 != 0) {
        switch (policy) {
            case ParityPolicy::increment_min: {
                auto it = std::min_element(raw.begin(), raw.end());
                *it += 1;
                break;
            }
            case ParityPolicy::drop_vertex: {
                // Drop one vertex of odd degree to keep the total even (a
                // minimum-degree one if it happens to be odd, else the
                // smallest odd degree present).
                auto it = raw.end();
                for (auto t = raw.begin(); t != raw.end(); ++t)
                    if (*t % 2 != 0 && (it == raw.end() || *t < *it)) it = t;
                if (it == raw.end())
                    throw InvalidFamilyParams("cannot repair parity by dropping a vertex");
                raw.erase(it);
                break;
            }
            case ParityPolicy::reject:
                throw OddTotalDegree(total);
        }
        adjusted = true;
    }
    return GenResult{DegreeSequence(std::move(raw)), adjusted};
}

}  // namespace

FamilyKind family_from_string(const std::string& s) {
    if (s == "regular") return FamilyKind::regular;
    if (s == "bivalued") return FamilyKind::bivalued;
    if (s == "powerlaw") return FamilyKind::powerlaw;
    if (s == "strict-powerlaw" || s == "strict_powerlaw") return FamilyKind::strict_powerlaw;
    if (s == "longtail") return FamilyKind::longtail;
    throw InvalidInput("unknown family kind: " + s);
}

std::string family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::regular: return "regular";
        case FamilyKind::bivalued: return "bivalued";
        case FamilyKind::powerlaw: return "powerlaw";
        case FamilyKind::strict_powerlaw: return "strict-powerlaw";
        case FamilyKind::longtail: return "longtail";
    }
    return "?";
}

ParityPolicy parity_from_string(const std::string& s) {
    if (s == "increment-min" || s == "increment_min") return ParityPolicy::increment_min;
    if (s == "drop-vertex" || s == "drop_vertex") return ParityPolicy::drop_vertex;
    if (s == "reject") return ParityPolicy::reject;
    throw InvalidInput("unknown parity policy: " + s);
}

std::string parity_name(ParityPolicy p) {
    switch (p) {
        case ParityPolicy::increment_min: return "increment-min";
        case ParityPolicy::drop_vertex: return "drop-vertex";
        case ParityPolicy::reject: return "reject";
    }
    return "?";
}

GenResult generate(const FamilySpec& spec) {
    if (spec.n < 1) throw InvalidFamilyParams("n must be >= 1");
    std::vector<Degree> raw;

    switch (spec.kind) {
        case FamilyKind::regular: {
            if (spec.degree < 1) throw InvalidFamilyParams("regular degree must be >= 1");
            raw.assign(static_cast<std::size_t>(spec.n), spec.degree);
            break;
        }
        case FamilyKind::bivalued: {
            if (spec.delta_small < 3 || spec.delta_small > spec.delta_big)
                throw InvalidFamilyParams("bivalued needs 3 <= delta_small <= delta_big");
            if (spec.ell < 0 || spec.ell > spec.n)
                throw InvalidFamilyParams("bivalued needs 0 <= ell <= n");
            raw.assign(static_cast<std::size_t>(spec.ell), spec.delta_big);
            raw.insert(raw.end(), static_cast<std::size_t>(spec.n - spec.ell),
                       spec.delta_small);
            break;
        }
        case FamilyKind::powerlaw:
        case FamilyKind::strict_powerlaw: {
            if (spec.gamma <= 1.0) throw InvalidFamilyParams("powerlaw needs gamma > 1");
            if (spec.c <= 0.0) throw InvalidFamilyParams("powerlaw needs c > 0");
            const double nn = static_cast<double>(spec.n);
            const long long dmax =
                static_cast<long long>(std::floor(std::pow(nn, 1.0 / spec.gamma)));
            for (long long i = 1; i <= std::max<long long>(dmax, 1); ++i) {
                long long ni = static_cast<long long>(
                    std::floor(spec.c * std::pow(static_cast<double>(i), -spec.gamma) * nn));
                if (spec.kind == FamilyKind::strict_powerlaw)
                    ni = std::max<long long>(ni, 1);
                raw.insert(raw.end(), static_cast<std::size_t>(ni), i);
            }
            break;
        }
        case FamilyKind::longtail: {
            if (!(spec.gamma > 1.0 && spec.gamma < 3.0) || spec.gamma == 2.0)
                throw InvalidFamilyParams("longtail needs 1 < gamma < 3, gamma != 2");
            if (!(spec.alpha > 0.5)) throw InvalidFamilyParams("longtail needs alpha > 1/2");
            const double blim = beta_limit(spec.gamma, spec.alpha);
            if (!(spec.beta > 0.0 && spec.beta < blim))
                throw InvalidFamilyParams("longtail needs 0 < beta < " +
                                          std::to_string(blim));
            const double nn = static_cast<double>(spec.n);
            const double na = std::pow(nn, spec.alpha);
            const double nb = std::pow(nn, spec.beta);
            long long used = 0;
            for (long long i = 1;; ++i) {
                const long long cnt = static_cast<long long>(
                    std::floor(nb * std::pow(static_cast<double>(i), -spec.gamma)));
                if (cnt < 1) break;
                const Degree value =
                    static_cast<Degree>(std::ceil(static_cast<double>(i) * na));
                raw.insert(raw.end(), static_cast<std::size_t>(cnt), value);
                used += cnt;
            }
            if (used > spec.n)
                throw InvalidFamilyParams("longtail bands exceed n coordinates");
            raw.insert(raw.end(), static_cast<std::size_t>(spec.n - used), 1);
            break;
        }
    }
    return finalize(std::move(raw), spec.parity);
}

ConformanceReport validate_family(const DegreeSequence& d, const FamilySpec& spec) {
    ConformanceReport rep;
    auto add = [&](std::string name, bool ok, bool fatal, double lhs, double rhs,
                   std::string detail = {}) {
        rep.checks.push_back(
            {std::move(name), ok, fatal, lhs, rhs, std::move(detail)});
        if (fatal && !ok) rep.conforms = false;
    };

    std::map<Degree, long long> counts;
    for (long long i = 0; i < d.n(); ++i) ++counts[d[i]];

    switch (spec.kind) {
        case FamilyKind::regular: {
            long long off = 0;
            bool values_ok = true;
            for (const auto& [v, c] : counts) {
                if (v == spec.degree) continue;
                if (v == spec.degree + 1) off += c;
                else values_ok = false;
            }
            add("degrees in {k, k+1}", values_ok, true,
                static_cast<double>(d.max_degree()), static_cast<double>(spec.degree + 1));
            add("at most one parity-adjusted vertex", off <= 1, true,
                static_cast<double>(off), 1.0);
            break;
        }
        case FamilyKind::bivalued: {
            long long big = 0, off = 0;
            bool values_ok = true;
            for (const auto& [v, c] : counts) {
                if (v == spec.delta_big) big += c;
                else if (v == spec.delta_small) continue;
                else if (v == spec.delta_small + 1 || v == spec.delta_big + 1) off += c;
                else values_ok = false;
            }
            add("degrees two-valued (one parity +1 allowed)", values_ok && off <= 1, true,
                static_cast<double>(off), 1.0);
            add("count of top-degree vertices equals ell",
                big == spec.ell || big + off == spec.ell, true, static_cast<double>(big),
                static_cast<double>(spec.ell));
            break;
        }
        case FamilyKind::powerlaw:
        case FamilyKind::strict_powerlaw: {
            const double nn = static_cast<double>(spec.n);
            const double cap = std::pow(nn, 1.0 / spec.gamma);
            double worst = 0.0;
            bool envelope_ok = true;
            for (const auto& [v, c] : counts) {
                const double bound =
                    spec.c * std::pow(static_cast<double>(v), -spec.gamma) * nn + 1.0;
                if (spec.kind == FamilyKind::strict_powerlaw &&
                    static_cast<double>(c) <= bound + 1.0) {
                    // strict variant may exceed the plain envelope by its
                    // forced minimum of one vertex per degree
                } else if (static_cast<double>(c) > bound) {
                    envelope_ok = false;
                }
                worst = std::max(worst,
                                 static_cast<double>(c) *
                                     std::pow(static_cast<double>(v), spec.gamma) / nn);
            }
            add("per-degree count within c * i^-gamma * n (+1 slack)", envelope_ok, true,
                worst, spec.c);
            add("max degree within n^(1/gamma) cap (+1 slack)",
                static_cast<double>(d.max_degree()) <= std::floor(cap) + 1.0, true,
                static_cast<double>(d.max_degree()), std::floor(cap) + 1.0);
            add("observed envelope constant C = max_i n_i i^gamma / n", true, false, worst,
                spec.c, "informational");
            if (spec.kind == FamilyKind::strict_powerlaw) {
                bool full = true;
                for (long long i = 1; i <= static_cast<long long>(std::floor(cap)); ++i)
                    if (!counts.count(i)) full = false;
                add("every degree class up to the cap nonempty", full, true,
                    full ? 1.0 : 0.0, 1.0);
            }
            break;
        }
        case FamilyKind::longtail: {
            const double nn = static_cast<double>(spec.n);
            const double na = std::pow(nn, spec.alpha);
            const double nb = std::pow(nn, spec.beta);
            std::map<long long, long long> bands;
            double largest_small = 0.0;
            for (const auto& [v, c] : counts) {
                if (static_cast<double>(v) < na) {
                    largest_small = std::max(largest_small, static_cast<double>(v));
                    continue;
                }
                bands[static_cast<long long>(
                    std::floor(static_cast<double>(v) / na + 1e-9))] += c;
            }
            bool census_ok = true;
            double worst = 0.0;
            for (const auto& [i, c] : bands) {
                const double bound =
                    nb * std::pow(static_cast<double>(i), -spec.gamma) + 1.0;
                if (static_cast<double>(c) > bound) census_ok = false;
                worst = std::max(worst, static_cast<double>(c) *
                                            std::pow(static_cast<double>(i), spec.gamma) /
                                            nb);
            }
            add("band census within n^beta * i^-gamma (+1 slack)", census_ok, true, worst,
                1.0);
            add("largest bounded coordinate", true, false, largest_small, na,
                "informational");
            add("observed band constant C = max_i b_i i^gamma / n^beta", true, false,
                worst, 1.0, "informational");
            break;
        }
    }
    return rep;
}

}  // namespace degseq
