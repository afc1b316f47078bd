// Command-line front end: gen / moments / bounds / estimate / sample /
// oracle / verify / compare.  JSON on stdout is the machine format; the
// default human rendering is derived from the same document.  Exit codes:
// 0 ok, 2 hypothesis violation (without --force), 3 oracle guard,
// 4 invalid input, 1 anything else.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "degseq/bigint.hpp"
#include "degseq/core.hpp"
#include "degseq/errbounds.hpp"
#include "degseq/errors.hpp"
#include "degseq/estimator.hpp"
#include "degseq/moments.hpp"
#include "degseq/oracle.hpp"
#include "degseq/pairing_model.hpp"
#include "degseq/seqgen.hpp"
#include "degseq/threads.hpp"
#include "degseq/verify.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace degseq;

constexpr const char* kVersion = "0.1.0";
constexpr double kDegenerateXi = 0.25;  // above this the O(sqrt(xi)) error bar is vacuous

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

std::string rat_str(const cpp_rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

double rat_double(const cpp_rational& r) { return r.convert_to<double>(); }

// JSON has no infinities; represent them as strings so nothing is lost.
Json finite_or_str(double x) {
    if (std::isfinite(x)) return x;
    if (std::isnan(x)) return "nan";
    return x > 0 ? "inf" : "-inf";
}

struct SeqInput {
    std::string file;
    std::string inline_degrees;

    void attach(CLI::App* cmd) {
        cmd->add_option("--seq", file, "sequence file (whitespace-separated degrees)");
        cmd->add_option("--degrees", inline_degrees,
                        "inline degree list, e.g. \"3,3,2,2\"");
    }

    DegreeSequence load(std::uint64_t& digest) const {
        if (!file.empty()) {
            std::ifstream in(file, std::ios::binary);
            if (!in) throw InvalidInput("cannot open sequence file: " + file);
            std::ostringstream buf;
            buf << in.rdbuf();
            digest = fnv1a(buf.str());
            std::istringstream is(buf.str());
            return DegreeSequence(read_sequence(is));
        }
        if (!inline_degrees.empty()) {
            digest = fnv1a(inline_degrees);
            std::string s = inline_degrees;
            for (char& c : s)
                if (c == ',' || c == ';' || c == ' ' || c == '\t') c = '\n';
            std::istringstream is(s);
            return DegreeSequence(read_sequence(is));
        }
        throw InvalidInput("no sequence given: use --seq FILE or --degrees LIST");
    }
};

std::string one_line(const Json& j) {
    if (!j.is_object()) return j.dump();
    std::string s;
    for (auto& [k, v] : j.items()) {
        if (!s.empty()) s += "  ";
        s += k + "=" + v.dump();
    }
    return s;
}

void render_human(const Json& j, int ind) {
    const std::string pad(2 * static_cast<std::size_t>(ind), ' ');
    for (auto& [k, v] : j.items()) {
        if (v.is_object()) {
            std::cout << pad << k << ":\n";
            render_human(v, ind + 1);
        } else if (v.is_array()) {
            if (v.empty() || !v.front().is_structured()) {
                std::cout << pad << k << ": " << v.dump() << "\n";
            } else {
                std::cout << pad << k << ":\n";
                for (const auto& el : v) std::cout << pad << "  - " << one_line(el) << "\n";
            }
        } else {
            std::cout << pad << k << ": " << v.dump() << "\n";
        }
    }
}

struct Emitter {
    std::string subcommand;
    Json params = Json::object();
    std::vector<std::uint64_t> seeds;
    std::uint64_t input_digest = 0;
    bool json_out = false;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    int finish(Json result, int exit_code = 0) const {
        const double wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        Json doc;
        doc["manifest"] = {{"subcommand", subcommand},
                           {"params", params},
                           {"version", kVersion},
                           {"schema", "degseq/1"},
                           {"seeds", seeds},
                           {"input_digest", hex64(input_digest)},
                           {"wall_ms", wall_ms}};
        doc["result"] = std::move(result);
        if (json_out) {
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << "degseq " << subcommand << " (v" << kVersion << ", "
                      << doc["manifest"]["wall_ms"].dump() << " ms)\n";
            render_human(doc["result"], 0);
        }
        return exit_code;
    }
};

Json checks_json(const std::vector<HypCheck>& checks) {
    Json arr = Json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name},
                       {"satisfied", c.satisfied},
                       {"fatal", c.fatal},
                       {"lhs", finite_or_str(c.lhs)},
                       {"rhs", finite_or_str(c.rhs)},
                       {"detail", c.detail}});
    return arr;
}

Json terms_json(const std::vector<std::pair<std::string, double>>& terms) {
    Json arr = Json::array();
    for (const auto& [name, value] : terms)
        arr.push_back({{"name", name}, {"value", finite_or_str(value)}});
    return arr;
}

Json hypotheses_json(const MethodHypotheses& h) {
    return {{"method", method_name(h.method)},
            {"case", h.case_tag},
            {"all_ok", h.all_ok},
            {"xi", finite_or_str(h.xi)},
            {"xi_terms", terms_json(h.xi_terms)},
            {"checks", checks_json(h.checks)}};
}

// 1-based vertex labels for display.
std::string signature_str(const SignatureMatrix& m) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, l] : m.loops) {
        os << (first ? "" : " ") << (i + 1) << ":" << (i + 1) << "=" << l;
        first = false;
    }
    for (const auto& [e, v] : m.multis) {
        os << (first ? "" : " ") << (e.first + 1) << ":" << (e.second + 1) << "=" << v;
        first = false;
    }
    return first ? "simple" : os.str();
}

Json lines_json(const std::vector<CheckLine>& lines) {
    Json arr = Json::array();
    for (const auto& l : lines)
        arr.push_back({{"suite", l.suite}, {"name", l.name}, {"ok", l.ok}, {"detail", l.detail}});
    return arr;
}

Json estimate_json(const DegreeSequence& d, const LogEstimate& est) {
    const double implied =
        est.log_g + sum_log_factorials(d) - log_phi(d.m1());
    return {{"method", method_name(est.method)},
            {"log_g", finite_or_str(est.log_g)},
            {"implied_log_p_simple", finite_or_str(implied)},
            {"xi", finite_or_str(est.xi)},
            {"sqrt_xi", finite_or_str(est.sqrt_xi)},
            {"degenerate", !(est.xi <= kDegenerateXi)},
            {"hypotheses_ok", est.hypotheses.all_ok},
            {"breakdown", terms_json(est.breakdown)},
            {"hypotheses", hypotheses_json(est.hypotheses)}};
}

MethodParams params_from(const std::optional<double>& gamma, const std::optional<double>& alpha,
                         const std::optional<double>& beta) {
    MethodParams p;
    p.gamma = gamma;
    p.alpha = alpha;
    p.beta = beta;
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"asymptotic counts of simple graphs with a given degree sequence"};
    app.require_subcommand(1);
    bool json_out = false;
    app.add_flag("--json", json_out, "emit the JSON document instead of the human rendering");

    // Shared option storage (one subcommand runs per invocation).
    SeqInput seq;
    int threads = 0;
    double slack = 1.0;
    std::uint64_t seed = 1;
    std::optional<double> opt_gamma, opt_alpha, opt_beta;
    std::function<int()> run;

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a degree-sequence family");
    FamilySpec spec;
    std::string family = "regular", parity = "increment-min", out_file;
    bool do_validate = false;
    gen->add_option("--family", family,
                    "regular | bivalued | powerlaw | strict-powerlaw | longtail");
    gen->add_option("--n", spec.n, "scale parameter (vertex count)")->required();
    gen->add_option("--degree", spec.degree, "regular: common degree");
    gen->add_option("--delta", spec.delta_small, "bivalued: small degree (>= 3)");
    gen->add_option("--Delta", spec.delta_big, "bivalued: large degree");
    gen->add_option("--ell", spec.ell, "bivalued: number of large-degree vertices");
    gen->add_option("--gamma", spec.gamma, "powerlaw / longtail exponent");
    gen->add_option("--c", spec.c, "powerlaw envelope constant");
    gen->add_option("--alpha", spec.alpha, "longtail band scale exponent");
    gen->add_option("--beta", spec.beta, "longtail band count exponent");
    gen->add_option("--parity", parity, "increment-min | drop-vertex | reject");
    gen->add_option("--out", out_file, "write the sequence to this file");
    gen->add_flag("--validate", do_validate, "re-derive the family's counting conditions");
    gen->callback([&]() {
        run = [&]() -> int {
            Emitter em;
            em.subcommand = "gen";
            em.json_out = json_out;
            spec.kind = family_from_string(family);
            spec.parity = parity_from_string(parity);
            em.params = {{"family", family},       {"n", spec.n},
                         {"degree", spec.degree},  {"delta", spec.delta_small},
                         {"Delta", spec.delta_big},{"ell", spec.ell},
                         {"gamma", spec.gamma},    {"c", spec.c},
                         {"alpha", spec.alpha},    {"beta", spec.beta},
                         {"parity", parity},       {"out", out_file}};
            auto res = generate(spec);
            if (!out_file.empty()) write_sequence_file(out_file, res.d.degrees());
            Json r = {{"family", family_name(spec.kind)},
                      {"n", res.d.n()},
                      {"m1", res.d.m1()},
                      {"max_degree", res.d.max_degree()},
                      {"min_degree", res.d.min_degree()},
                      {"parity_adjusted", res.parity_adjusted}};
            if (res.d.n() <= 1000) r["degrees"] = res.d.degrees();
            if (!out_file.empty()) r["written_to"] = out_file;
            if (do_validate) {
                auto conf = validate_family(res.d, spec);
                r["conforms"] = conf.conforms;
                r["conformance"] = checks_json(conf.checks);
            }
            return em.finish(std::move(r));
        };
    });

    // ---- moments ----
    auto* mom = app.add_subcommand("moments", "falling-factorial moments and U functionals");
    mom->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
    seq.attach(mom);
    int kmax = 4;
    long long h_opt = -1;
    std::string range = "literal";
    mom->add_option("--kmax", kmax, "highest moment order (<= 8)");
    mom->add_option("--h", h_opt, "head/tail split point (default: degrees above sqrt(M1))");
    mom->add_option("--range", range, "inner-sum range for U3/U5: literal | strict");
    mom->callback([&]() {
        run = [&]() -> int {
            Emitter em;
            em.subcommand = "moments";
            em.json_out = json_out;
            em.params = {{"seq", seq.file}, {"degrees", seq.inline_degrees},
                         {"kmax", kmax},    {"h", h_opt},
                         {"range", range}};
            auto d = seq.load(em.input_digest);
            if (kmax < 1 || kmax > kMaxMomentOrder)
                throw InvalidInput("kmax must be in 1..8");
            WRange w;
            if (range == "literal")
                w = WRange::literal;
            else if (range == "strict")
                w = WRange::strict;
            else
                throw InvalidInput("range must be literal or strict");
            auto prof = moments(d, kmax);
            const long long h = h_opt >= 0 ? h_opt : default_split_point(d);
            if (h > d.n()) throw InvalidInput("h must be in 0..n");
            auto sp = split(d, h);
            auto ud = u_functionals_double(d, w);
            auto ue = u_functionals_exact(d, w);
            Json M = Json::array(), He = Json::array(), Le = Json::array();
            for (int k = 0; k <= kmax; ++k) M.push_back(prof.M[k].str());
            for (int k = 1; k <= 4; ++k) {
                He.push_back(sp.H[k].str());
                Le.push_back(sp.L[k].str());
            }
            Json U = Json::object(), Ux = Json::object();
            for (int k = 1; k <= 7; ++k) {
                U["U" + std::to_string(k)] = finite_or_str(ud[k]);
                Ux["U" + std::to_string(k)] = rat_str(ue[k]);
            }
            Json r = {{"n", d.n()},
                      {"m1", d.m1()},
                      {"delta", prof.delta},
                      {"tau", prof.tau},
                      {"M", M},
                      {"histogram",
                       {{"value", prof.hist.value}, {"count", prof.hist.count}}},
                      {"split", {{"h", h}, {"H", He}, {"L", Le}}},
                      {"U", U},
                      {"U_exact", Ux}};
            if (d.n() >= 2) {
                r["lambda_max"] = rat_double(lambda(d, 0, 1));
                r["lambda_max_exact"] = rat_str(lambda(d, 0, 1));
            }
            return em.finish(std::move(r));
        };
    });

    // ---- bounds ----
    auto* bnd = app.add_subcommand("bounds", "error-functional bounds and method hypotheses");
    bnd->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
    seq.attach(bnd);
    long long bh_opt = -1;
    bool battery = false;
    bnd->add_option("--h", bh_opt, "head/tail split point");
    bnd->add_option("--slack", slack, "slack factor for O/Omega-style hypothesis checks");
    bnd->add_option("--gamma", [&](const std::vector<std::string>& v) {
        opt_gamma = std::stod(v.at(0));
        return true;
    }, "exponent for the powerlaw/longtail hypotheses");
    bnd->add_option("--alpha", [&](const std::vector<std::string>& v) {
        opt_alpha = std::stod(v.at(0));
        return true;
    }, "longtail alpha");
    bnd->add_option("--beta", [&](const std::vector<std::string>& v) {
        opt_beta = std::stod(v.at(0));
        return true;
    }, "longtail beta");
    bnd->add_flag("--battery", battery, "run the exact inequality battery as well");
    bnd->callback([&]() {
        run = [&]() -> int {
            Emitter em;
            em.subcommand = "bounds";
            em.json_out = json_out;
            em.params = {{"seq", seq.file}, {"degrees", seq.inline_degrees},
                         {"h", bh_opt},     {"slack", slack},
                         {"battery", battery}};
            auto d = seq.load(em.input_digest);
            std::optional<long long> h;
            if (bh_opt >= 0) h = bh_opt;
            auto rep = xi_report(d, h, slack);
            auto part = [&](const BoundPart& p) -> Json {
                return {{"name", p.name},
                        {"value", finite_or_str(p.value)},
                        {"applicable", p.applicable},
                        {"terms", terms_json(p.terms)},
                        {"notes", p.notes}};
            };
            Json parts = Json::array();
            for (const BoundPart* p : {&rep.general, &rep.lemma_a, &rep.lemma_b, &rep.cor_star,
                                       &rep.cor_star_b, &rep.theta, &rep.split, &rep.split_large,
                                       &rep.split_large_b})
                parts.push_back(part(*p));
            Json methods = Json::array();
            const MethodParams mp = params_from(opt_gamma, opt_alpha, opt_beta);
            for (Method m : {Method::general, Method::m2, Method::powerlaw, Method::bivalued,
                             Method::longtail}) {
                try {
                    methods.push_back(hypotheses_json(method_hypotheses(d, m, mp, slack)));
                } catch (const InvalidInput& e) {
                    methods.push_back(
                        {{"method", method_name(m)}, {"skipped", std::string(e.what())}});
                }
            }
            Json r = {{"n", d.n()},         {"m1", d.m1()},
                      {"slack", rep.slack}, {"h_used", rep.h_used},
                      {"bounds", parts},    {"methods", methods}};
            if (battery) {
                auto lines = verify_bounds(d);
                r["battery_ok"] = all_ok(lines);
                r["battery"] = lines_json(lines);
            }
            return em.finish(std::move(r));
        };
    });

    // ---- estimate ----
    auto* est_cmd = app.add_subcommand("estimate", "formula estimate of log g(d)");
    seq.attach(est_cmd);
    std::string method = "general";
    bool force = false;
    est_cmd->add_option("--method", method, "general | m2 | powerlaw | bivalued | longtail");
    est_cmd->add_option("--gamma", [&](const std::vector<std::string>& v) {
        opt_gamma = std::stod(v.at(0));
        return true;
    }, "family exponent");
    est_cmd->add_option("--alpha", [&](const std::vector<std::string>& v) {
        opt_alpha = std::stod(v.at(0));
        return true;
    }, "longtail alpha");
    est_cmd->add_option("--beta", [&](const std::vector<std::string>& v) {
        opt_beta = std::stod(v.at(0));
        return true;
    }, "longtail beta");
    est_cmd->add_flag("--force", force, "estimate even when fatal hypotheses fail");
    est_cmd->add_option("--slack", slack, "slack factor for hypothesis checks");
    est_cmd->add_option("--threads", threads, "worker threads (0 = DEGSEQ_THREADS or all)");
    est_cmd->callback([&]() {
        run = [&]() -> int {
            Emitter em;
            em.subcommand = "estimate";
            em.json_out = json_out;
            em.params = {{"seq", seq.file},   {"degrees", seq.inline_degrees},
                         {"method", method},  {"force", force},
                         {"slack", slack},    {"threads", threads}};
            auto d = seq.load(em.input_digest);
            const auto est = estimate_log_g(d, method_from_string(method),
                                            params_from(opt_gamma, opt_alpha, opt_beta), force,
                                            slack, threads);
            return em.finish(estimate_json(d, est));
        };
    });

    // ---- sample ----
    auto* smp = app.add_subcommand("sample", "pairing-model Monte Carlo");
    seq.attach(smp);
    long long samples = 100000;
    bool with_census = false;
    int top = 10;
    smp->add_option("--samples", samples, "number of pairings to draw");
    smp->add_option("--seed", seed, "base seed (sample k uses substream(seed, k))");
    smp->add_option("--threads", threads, "worker threads (0 = DEGSEQ_THREADS or all)");
    smp->add_flag("--census", with_census, "tally sampled signatures");
    smp->add_option("--top", top, "how many census cells to report");
    smp->callback([&]() {
        run = [&]() -> int {
            Emitter em;
            em.subcommand = "sample";
            em.json_out = json_out;
            em.seeds = {seed};
            em.params = {{"seq", seq.file},     {"degrees", seq.inline_degrees},
                         {"samples", samples},  {"seed", seed},
                         {"threads", threads},  {"census", with_census},
                         {"top", top}};
            auto d = seq.load(em.input_digest);
            if (samples <= 0) throw InvalidInput("samples must be positive");
            auto mc = estimate_p_simple(d, samples, seed, threads);
            Json r = {{"samples", mc.samples},
                      {"successes", mc.successes},
                      {"p_hat", mc.p_hat},
                      {"log_p_hat", finite_or_str(mc.log_p_hat)},
                      {"wilson_low", mc.wilson_low},
                      {"wilson_high", mc.wilson_high},
                      {"threads", mc.threads}};
            if (with_census) {
                auto census = sample_signature_census(d, samples, seed, threads);
                std::vector<std::pair<const SignatureMatrix*, long long>> cells;
                for (const auto& [m, c] : census) cells.push_back({&m, c});
                std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
                    return a.second > b.second;
                });
                const double xi1 = xi_one(d);
                Json arr = Json::array();
                for (std::size_t t = 0; t < cells.size() && t < static_cast<std::size_t>(top);
                     ++t) {
                    auto ex = eta_kappa_xi(*cells[t].first, d);
                    arr.push_back({{"signature", signature_str(*cells[t].first)},
                                   {"count", cells[t].second},
                                   {"xi_of_m", finite_or_str(ex.xi)},
                                   {"in_class", in_class(*cells[t].first, d, xi1)}});
                }
                r["census_classes"] = census.size();
                r["xi_one"] = finite_or_str(xi1);
                r["census_top"] = arr;
            }
            return em.finish(std::move(r));
        };
    });

    // ---- oracle ----
    auto* orc = app.add_subcommand("oracle", "exhaustive exact enumeration (small inputs)");
    seq.attach(orc);
    bool orc_census = false;
    int orc_top = 20;
    std::string expect;
    orc->add_option("--top", orc_top, "how many census cells to report");
    orc->add_flag("--census", orc_census, "include the signature census");
    orc->add_option("--expect", expect,
                    "comma list of statistics to average exactly: "
                    "Z, Z0, Z2, Z3, K, D, Y:u:v, Y2:u:v (1-based vertices)");
    orc->callback([&]() {
        run = [&]() -> int {
            Emitter em;
            em.subcommand = "oracle";
            em.json_out = json_out;
            em.params = {{"seq", seq.file},     {"degrees", seq.inline_degrees},
                         {"census", orc_census},{"top", orc_top},
                         {"expect", expect}};
            auto d = seq.load(em.input_digest);
            auto rep = oracle_report(d, orc_census);
            Json r = {{"n", d.n()},
                      {"m1", rep.m1},
                      {"phi", rep.phi.str()},
                      {"simple_pairings", rep.simple_pairings.str()},
                      {"g", rep.g.str()},
                      {"p_simple", rat_str(rep.p_simple)},
                      {"p_simple_double", rat_double(rep.p_simple)}};
            if (rep.census) {
                std::vector<std::pair<const SignatureMatrix*, long long>> cells;
                for (const auto& [m, c] : *rep.census) cells.push_back({&m, c});
                std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
                    return a.second > b.second;
                });
                Json arr = Json::array();
                for (std::size_t t = 0;
                     t < cells.size() && t < static_cast<std::size_t>(orc_top); ++t)
                    arr.push_back({{"signature", signature_str(*cells[t].first)},
                                   {"count", cells[t].second}});
                r["census_classes"] = rep.census->size();
                r["census_top"] = arr;
            }
            if (!expect.empty()) {
                Json arr = Json::array();
                std::string token;
                std::istringstream ts(expect);
                while (std::getline(ts, token, ',')) {
                    if (token.empty()) continue;
                    std::function<long long(const Pairing&)> f;
                    if (token == "Z" || token == "Z0" || token == "Z2" || token == "Z3" ||
                        token == "K" || token == "D") {
                        f = [&d, token](const Pairing& p) {
                            auto st = signature_stats(signature_of(p), d);
                            if (token == "Z") return st.z;
                            if (token == "Z0") return st.z0;
                            if (token == "Z2") return st.z2;
                            if (token == "Z3") return st.z3;
                            if (token == "K") return st.k;
                            return st.d;
                        };
                    } else if (token.rfind("Y", 0) == 0) {
                        const bool second = token.rfind("Y2:", 0) == 0;
                        std::istringstream ps(token.substr(second ? 3 : 2));
                        long long u = 0, v = 0;
                        char sep = 0;
                        if (!(ps >> u >> sep >> v) || sep != ':' || u < 1 || v < 1 ||
                            u > d.n() || v > d.n() || u == v)
                            throw InvalidInput("bad expect token: " + token);
                        f = [u, v, second](const Pairing& p) {
                            const long long y = to_multigraph(p).multiplicity(
                                static_cast<int>(u - 1), static_cast<int>(v - 1));
                            return second ? y * (y - 1) : y;
                        };
                    } else {
                        throw InvalidInput("unknown expect token: " + token);
                    }
                    const cpp_rational e = exact_expectation(d, f);
                    arr.push_back({{"name", token},
                                   {"value", rat_str(e)},
                                   {"value_double", rat_double(e)}});
                }
                r["expectations"] = arr;
            }
            return em.finish(std::move(r));
        };
    });

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "run an invariant battery");
    std::string suite = "all";
    long long max_m1 = 0;
    ver->add_option("--suite", suite,
                    "moments | switching | s-formula | omega-star | oracle-identities | all");
    ver->add_option("--max-m1", max_m1, "override the exhaustive-universe cutoff");
    ver->callback([&]() {
        run = [&]() -> int {
            Emitter em;
            em.subcommand = "verify";
            em.json_out = json_out;
            em.params = {{"suite", suite}, {"max_m1", max_m1}};
            std::vector<CheckLine> lines;
            bool known = false;
            auto want = [&](const char* name) {
                if (suite != name && suite != "all") return false;
                known = true;
                return true;
            };
            if (want("moments")) {
                auto l = verify_moments(max_m1 > 0 ? max_m1 : 12);
                lines.insert(lines.end(), l.begin(), l.end());
            }
            if (want("switching")) {
                auto l = verify_switching(max_m1 > 0 ? max_m1 : 10);
                lines.insert(lines.end(), l.begin(), l.end());
            }
            if (want("s-formula")) {
                auto l = verify_s_formula();
                lines.insert(lines.end(), l.begin(), l.end());
            }
            if (want("omega-star")) {
                auto l = verify_omega_star();
                lines.insert(lines.end(), l.begin(), l.end());
            }
            if (want("oracle-identities")) {
                auto l = verify_oracle(max_m1 > 0 ? max_m1 : 12);
                lines.insert(lines.end(), l.begin(), l.end());
            }
            if (!known)
                throw InvalidInput("unknown suite: " + suite);
            const bool ok = all_ok(lines);
            long long passed = 0;
            for (const auto& l : lines) passed += l.ok ? 1 : 0;
            Json r = {{"ok", ok},
                      {"passed", passed},
                      {"failed", static_cast<long long>(lines.size()) - passed},
                      {"lines", lines_json(lines)}};
            if (!json_out)
                for (const auto& l : lines)
                    std::cout << (l.ok ? "[PASS] " : "[FAIL] ") << l.suite << ": " << l.name
                              << " (" << l.detail << ")\n";
            if (json_out) return em.finish(std::move(r), ok ? 0 : 1);
            return ok ? 0 : 1;
        };
    });

    // ---- compare ----
    auto* cmp = app.add_subcommand("compare", "formulas vs Monte Carlo vs exact enumeration");
    seq.attach(cmp);
    std::string methods_arg = "general,m2";
    long long cmp_samples = 0;
    cmp->add_option("--methods", methods_arg, "comma list, or \"all\"");
    cmp->add_option("--samples", cmp_samples, "Monte Carlo sample count (0 = skip)");
    cmp->add_option("--seed", seed, "Monte Carlo base seed");
    cmp->add_option("--threads", threads, "worker threads");
    cmp->add_option("--slack", slack, "slack factor for hypothesis checks");
    cmp->add_option("--gamma", [&](const std::vector<std::string>& v) {
        opt_gamma = std::stod(v.at(0));
        return true;
    }, "family exponent");
    cmp->add_option("--alpha", [&](const std::vector<std::string>& v) {
        opt_alpha = std::stod(v.at(0));
        return true;
    }, "longtail alpha");
    cmp->add_option("--beta", [&](const std::vector<std::string>& v) {
        opt_beta = std::stod(v.at(0));
        return true;
    }, "longtail beta");
    cmp->callback([&]() {
        run = [&]() -> int {
            Emitter em;
            em.subcommand = "compare";
            em.json_out = json_out;
            em.seeds = {seed};
            em.params = {{"seq", seq.file},       {"degrees", seq.inline_degrees},
                         {"methods", methods_arg},{"samples", cmp_samples},
                         {"seed", seed},          {"threads", threads},
                         {"slack", slack}};
            auto d = seq.load(em.input_digest);
            std::vector<std::string> names;
            if (methods_arg == "all") {
                names = {"general", "m2", "powerlaw", "bivalued", "longtail"};
            } else {
                std::istringstream ms(methods_arg);
                std::string tok;
                while (std::getline(ms, tok, ','))
                    if (!tok.empty()) names.push_back(tok);
            }
            if (names.empty()) throw InvalidInput("no methods given");
            const MethodParams mp = params_from(opt_gamma, opt_alpha, opt_beta);
            Json table = Json::array();
            Json flags = Json::array();
            struct Row {
                std::string name;
                double log_g, implied, sqrt_xi;
            };
            std::vector<Row> rows;
            for (const auto& nm : names) {
                const Method m = method_from_string(nm);
                try {
                    auto est = estimate_log_g(d, m, mp, /*force=*/true, slack, threads);
                    Json row = estimate_json(d, est);
                    table.push_back(row);
                    rows.push_back({method_name(m), est.log_g,
                                    row["implied_log_p_simple"].is_number()
                                        ? row["implied_log_p_simple"].get<double>()
                                        : -std::numeric_limits<double>::infinity(),
                                    est.sqrt_xi});
                    if (!(est.xi <= kDegenerateXi))
                        flags.push_back("degenerate: xi not small for method " +
                                        method_name(m));
                    if (!est.hypotheses.all_ok)
                        flags.push_back("hypotheses fail for method " + method_name(m) +
                                        " (forced)");
                } catch (const InvalidInput& e) {
                    if (methods_arg != "all") throw;
                    table.push_back({{"method", nm}, {"skipped", std::string(e.what())}});
                }
            }
            Json r = {{"n", d.n()}, {"m1", d.m1()}, {"methods", table}};

            if (cmp_samples > 0) {
                auto mc = estimate_p_simple(d, cmp_samples, seed, threads);
                r["monte_carlo"] = {{"samples", mc.samples},
                                    {"successes", mc.successes},
                                    {"p_hat", mc.p_hat},
                                    {"log_p_hat", finite_or_str(mc.log_p_hat)},
                                    {"wilson_low", mc.wilson_low},
                                    {"wilson_high", mc.wilson_high}};
                if (mc.successes > 0 && mc.wilson_low > 0) {
                    const double half_log =
                        0.5 * (std::log(mc.wilson_high) - std::log(mc.wilson_low));
                    for (const auto& row : rows)
                        if (std::abs(row.implied - mc.log_p_hat) > 3 * half_log)
                            flags.push_back("method " + row.name +
                                            " outside 3 Wilson half-widths of Monte Carlo");
                }
            }
            if (d.m1() <= kMaxOraclePoints) {
                auto rep = oracle_report(d, false);
                const double g = rep.g.convert_to<double>();
                r["oracle"] = {{"g", rep.g.str()},
                               {"log_g", g > 0 ? Json(std::log(g)) : Json("-inf")},
                               {"p_simple", rat_double(rep.p_simple)}};
                if (g > 0) {
                    for (const auto& row : rows)
                        if (std::abs(row.log_g - std::log(g)) >
                            10.0 * (row.sqrt_xi + 1.0 / static_cast<double>(d.m1())))
                            flags.push_back("method " + row.name +
                                            " disagrees with exact count");
                } else {
                    flags.push_back("exact count is zero: formulas are vacuous here");
                }
            }
            r["flags"] = flags;
            return em.finish(std::move(r));
        };
    });

    // Let top-level flags (--json) appear after the subcommand name.
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 4;  // help/version exit clean, bad flags are invalid input
    }

    try {
        return run ? run() : 4;
    } catch (const HypothesisViolation& e) {
        std::cerr << "error: " << e.what() << " (rerun with --force to evaluate anyway)\n";
        return 2;
    } catch (const OracleTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
