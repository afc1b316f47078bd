#include "degseq/switching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "degseq/errors.hpp"
#include "degseq/oracle.hpp"

namespace degseq {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw SwitchMismatch(what);
}

bool valid_point(const Pairing& p, std::int32_t x) {
    return x >= 0 && x < p.points();
}

// Number of pairs joining vertices i and j (i != j).
long long count_ij(const Pairing& p, int i, int j) {
    long long c = 0;
    for (std::int32_t a = p.bin_start[i]; a < p.bin_start[i + 1]; ++a)
        if (p.bin_of[p.mate[a]] == j) ++c;
    return c;
}

// Number of loops at vertex i.
long long count_loops_at(const Pairing& p, int i) {
    long long c = 0;
    for (std::int32_t a = p.bin_start[i]; a < p.bin_start[i + 1]; ++a)
        if (p.mate[a] > a && p.bin_of[p.mate[a]] == i) ++c;
    return c;
}

bool adjacent(const Multigraph& g, int u, int w) {
    return u != w && g.multiplicity(u, w) >= 1;
}

void add_violation(std::vector<std::string>& out, const char* label) {
    if (std::find(out.begin(), out.end(), label) == out.end()) out.emplace_back(label);
}

std::pair<int, int> ordered(int i, int j) { return {std::min(i, j), std::max(i, j)}; }

// Ordered selections of k distinct elements from items, visited via cb.
template <typename T, typename Cb>
void ordered_selections(const std::vector<T>& items, int k, const Cb& cb) {
    std::vector<T> cur;
    std::vector<bool> used(items.size(), false);
    cur.reserve(k);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == k) {
            cb(cur);
            return;
        }
        for (std::size_t t = 0; t < items.size(); ++t) {
            if (used[t]) continue;
            used[t] = true;
            cur.push_back(items[t]);
            self(self);
            cur.pop_back();
            used[t] = false;
        }
    };
    rec(rec);
}

using PointPair = std::pair<std::int32_t, std::int32_t>;

// All pairs of p in canonical (low point, high point) form.
std::vector<PointPair> all_pairs(const Pairing& p) {
    std::vector<PointPair> out;
    out.reserve(static_cast<std::size_t>(p.points() / 2));
    for (std::int32_t a = 0; a < p.points(); ++a)
        if (p.mate[a] > a) out.push_back({a, p.mate[a]});
    return out;
}

}  // namespace

SwitchOutcome forward_multi(const Pairing& p, const MultiEdgeSwitch& s) {
    require(s.i != s.j && s.i >= 0 && s.j >= 0 && s.i < p.n() && s.j < p.n(),
            "forward_multi: i, j must be distinct vertices");
    const int m = static_cast<int>(s.targets.size());
    require(m >= 1, "forward_multi: at least one target pair required");
    require(s.aux.size() == s.targets.size(),
            "forward_multi: need exactly one auxiliary pair per target");

    std::set<std::int32_t> tpoints;
    for (const auto& [a, b] : s.targets) {
        require(valid_point(p, a) && valid_point(p, b), "forward_multi: point out of range");
        require(p.bin_of[a] == s.i && p.bin_of[b] == s.j,
                "forward_multi: target endpoints must sit in i and j");
        require(p.mate[a] == b, "forward_multi: target is not a pair of the pairing");
        require(tpoints.insert(a).second && tpoints.insert(b).second,
                "forward_multi: duplicate target pair");
    }
    require(count_ij(p, s.i, s.j) == m,
            "forward_multi: targets must cover every i-j pair");

    std::set<std::int32_t> apoints;
    for (const auto& [x, y] : s.aux) {
        require(valid_point(p, x) && valid_point(p, y), "forward_multi: point out of range");
        require(p.mate[x] == y, "forward_multi: auxiliary is not a pair of the pairing");
        require(!tpoints.count(x) && !tpoints.count(y),
                "forward_multi: auxiliary pair overlaps a target pair");
        require(apoints.insert(x).second && apoints.insert(y).second,
                "forward_multi: duplicate auxiliary pair");
    }

    const Multigraph g = to_multigraph(p);
    SwitchOutcome out;
    bool vi = false, vii = false, viii = false, viv = false, vv = false;
    std::vector<std::pair<int, int>> auxv;
    for (const auto& [x, y] : s.aux) {
        const int u = p.bin_of[x], v = p.bin_of[y];
        auxv.push_back({u, v});
        const bool in_multi = u != v && g.multiplicity(u, v) >= 2;
        if (in_multi) vi = true;
        bool near_multi = false, near_single = false;
        for (int w : {u, v})
            for (int t : {s.i, s.j}) {
                if (w == t) continue;
                const long long mult = g.multiplicity(w, t);
                if (mult >= 2) near_multi = true;
                if (mult == 1) near_single = true;
            }
        if (near_multi && !in_multi) vii = true;
        if (near_single) viii = true;
        if (u == s.i || u == s.j || v == s.i || v == s.j || u == v) vv = true;
    }
    for (std::size_t a = 0; a < auxv.size() && !viv; ++a)
        for (std::size_t b = a + 1; b < auxv.size() && !viv; ++b) {
            const auto& [ua, va] = auxv[a];
            const auto& [ub, vb] = auxv[b];
            if (ua == ub || ua == vb || va == ub || va == vb) viv = true;
        }
    if (vi) add_violation(out.violations, "i");
    if (vii) add_violation(out.violations, "ii");
    if (viii) add_violation(out.violations, "iii");
    if (viv) add_violation(out.violations, "iv");
    if (vv) add_violation(out.violations, "v");
    out.good = out.violations.empty();

    Pairing r = p;
    for (int gdx = 0; gdx < m; ++gdx) {
        const auto [ta, tb] = s.targets[gdx];
        const auto [xf, xs] = s.aux[gdx];
        r.mate[ta] = xf;
        r.mate[xf] = ta;
        r.mate[tb] = xs;
        r.mate[xs] = tb;
    }
    SignatureMatrix expected = signature_of(p);
    expected.multis.erase(ordered(s.i, s.j));
    out.effective =
        signature_of(r) == expected && count_ij(r, s.i, s.j) == 0;
    out.result = std::move(r);
    return out;
}

SwitchOutcome inverse_multi(const Pairing& p, const InverseMultiSwitch& s) {
    require(s.i != s.j && s.i >= 0 && s.j >= 0 && s.i < p.n() && s.j < p.n(),
            "inverse_multi: i, j must be distinct vertices");
    const int m = static_cast<int>(s.picks_i.size());
    require(m >= 1, "inverse_multi: at least one pick required");
    require(s.picks_j.size() == s.picks_i.size(),
            "inverse_multi: need equally many picks in i and j");
    require(count_ij(p, s.i, s.j) == 0,
            "inverse_multi: the pairing already joins i and j");

    std::set<std::int32_t> picked;
    for (std::int32_t a : s.picks_i) {
        require(valid_point(p, a) && p.bin_of[a] == s.i,
                "inverse_multi: picks_i must be points of vertex i");
        require(picked.insert(a).second, "inverse_multi: duplicate pick");
    }
    for (std::int32_t b : s.picks_j) {
        require(valid_point(p, b) && p.bin_of[b] == s.j,
                "inverse_multi: picks_j must be points of vertex j");
        require(picked.insert(b).second, "inverse_multi: duplicate pick");
    }

    const Multigraph g = to_multigraph(p);
    SwitchOutcome out;
    bool vvi = false, vvii = false, vviii = false, vix = false;
    bool ill_defined = false;
    std::vector<int> va(m), vb(m);
    for (int gdx = 0; gdx < m; ++gdx) {
        const std::int32_t am = p.mate[s.picks_i[gdx]];
        const std::int32_t bm = p.mate[s.picks_j[gdx]];
        if (picked.count(am) || picked.count(bm)) ill_defined = true;
        va[gdx] = p.bin_of[am];
        vb[gdx] = p.bin_of[bm];
        if (va[gdx] == s.i || (va[gdx] != s.i && g.multiplicity(s.i, va[gdx]) >= 2))
            vvi = true;
        if (vb[gdx] == s.j || (vb[gdx] != s.j && g.multiplicity(s.j, vb[gdx]) >= 2))
            vvi = true;
        if (va[gdx] != vb[gdx]) {
            const long long mult = g.multiplicity(va[gdx], vb[gdx]);
            if (mult >= 2) vvii = true;
            if (mult == 1) vviii = true;
        }
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m && !vix; ++b)
            if (va[a] == vb[b]) vix = true;
    if (vvi) add_violation(out.violations, "vi");
    if (vvii) add_violation(out.violations, "vii");
    if (vviii) add_violation(out.violations, "viii");
    if (vix) add_violation(out.violations, "ix");
    out.good = out.violations.empty();

    if (ill_defined) {
        // A picked point's own pair was chosen twice over: the rewiring is
        // not a well-defined pair replacement.  (vi) necessarily holds.
        out.effective = false;
        return out;
    }
    Pairing r = p;
    for (int gdx = 0; gdx < m; ++gdx) {
        const std::int32_t a = s.picks_i[gdx], b = s.picks_j[gdx];
        const std::int32_t am = p.mate[a], bm = p.mate[b];
        r.mate[a] = b;
        r.mate[b] = a;
        r.mate[am] = bm;
        r.mate[bm] = am;
    }
    SignatureMatrix expected = signature_of(p);
    if (m >= 2) expected.multis[ordered(s.i, s.j)] = m;
    out.effective = signature_of(r) == expected && count_ij(r, s.i, s.j) == m;
    out.result = std::move(r);
    return out;
}

SwitchOutcome forward_loop(const Pairing& p, const LoopSwitch& s) {
    require(s.i >= 0 && s.i < p.n(), "forward_loop: vertex out of range");
    const int m = static_cast<int>(s.loops.size());
    require(m >= 1, "forward_loop: at least one loop required");
    require(s.aux1.size() == s.loops.size() && s.aux2.size() == s.loops.size(),
            "forward_loop: need two auxiliary pairs per loop");

    std::set<std::int32_t> lpoints;
    for (const auto& [a, b] : s.loops) {
        require(valid_point(p, a) && valid_point(p, b), "forward_loop: point out of range");
        require(p.bin_of[a] == s.i && p.bin_of[b] == s.i,
                "forward_loop: loop endpoints must sit in vertex i");
        require(p.mate[a] == b, "forward_loop: loop is not a pair of the pairing");
        require(lpoints.insert(a).second && lpoints.insert(b).second,
                "forward_loop: duplicate loop");
    }
    require(count_loops_at(p, s.i) == m, "forward_loop: loops must cover every loop at i");

    std::set<std::int32_t> apoints;
    auto check_aux = [&](const PointPair& pr) {
        const auto [x, y] = pr;
        require(valid_point(p, x) && valid_point(p, y), "forward_loop: point out of range");
        require(p.mate[x] == y, "forward_loop: auxiliary is not a pair of the pairing");
        require(!lpoints.count(x) && !lpoints.count(y),
                "forward_loop: auxiliary pair overlaps a loop");
        require(apoints.insert(x).second && apoints.insert(y).second,
                "forward_loop: duplicate auxiliary pair");
    };
    for (const auto& pr : s.aux1) check_aux(pr);
    for (const auto& pr : s.aux2) check_aux(pr);

    const Multigraph g = to_multigraph(p);
    SwitchOutcome out;
    bool va = false, vbad = false, vc = false;
    std::vector<int> verts;
    verts.reserve(static_cast<std::size_t>(4 * m));
    for (int gdx = 0; gdx < m; ++gdx) {
        const int v1 = p.bin_of[s.aux1[gdx].first];   // joins loop point 2g-1
        const int v2 = p.bin_of[s.aux1[gdx].second];  // joins aux2's first
        const int v3 = p.bin_of[s.aux2[gdx].first];   // joins aux1's second
        const int v4 = p.bin_of[s.aux2[gdx].second];  // joins loop point 2g
        verts.insert(verts.end(), {v1, v2, v3, v4});
        if (adjacent(g, s.i, v1) || adjacent(g, s.i, v4)) vbad = true;
        if (adjacent(g, v2, v3)) vc = true;
    }
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::find(verts.begin(), verts.end(), s.i) != verts.end() ||
        std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        va = true;
    if (va) add_violation(out.violations, "a");
    if (vbad) add_violation(out.violations, "b");
    if (vc) add_violation(out.violations, "c");
    out.good = out.violations.empty();

    Pairing r = p;
    for (int gdx = 0; gdx < m; ++gdx) {
        const auto [la, lb] = s.loops[gdx];
        const auto [x1, y1] = s.aux1[gdx];
        const auto [x2, y2] = s.aux2[gdx];
        r.mate[la] = x1;
        r.mate[x1] = la;
        r.mate[lb] = y2;
        r.mate[y2] = lb;
        r.mate[y1] = x2;
        r.mate[x2] = y1;
    }
    // The loop classes constrain only the diagonal, so effectiveness is the
    // loop vector alone: every loop at i gone, every other count unchanged.
    std::map<int, long long> expected = signature_of(p).loops;
    expected.erase(s.i);
    out.effective = signature_of(r).loops == expected;
    out.result = std::move(r);
    return out;
}

SwitchOutcome inverse_loop(const Pairing& p, const InverseLoopSwitch& s) {
    require(s.i >= 0 && s.i < p.n(), "inverse_loop: vertex out of range");
    const int m = static_cast<int>(s.aux.size());
    require(m >= 1, "inverse_loop: at least one auxiliary pair required");
    require(s.picks.size() == static_cast<std::size_t>(2 * m),
            "inverse_loop: need two picks per created loop");
    require(count_loops_at(p, s.i) == 0, "inverse_loop: vertex i already has a loop");

    std::set<std::int32_t> picked;
    for (std::int32_t a : s.picks) {
        require(valid_point(p, a) && p.bin_of[a] == s.i,
                "inverse_loop: picks must be points of vertex i");
        require(picked.insert(a).second, "inverse_loop: duplicate pick");
    }
    std::set<std::int32_t> apoints;
    for (const auto& [x, y] : s.aux) {
        require(valid_point(p, x) && valid_point(p, y), "inverse_loop: point out of range");
        require(p.mate[x] == y, "inverse_loop: auxiliary is not a pair of the pairing");
        require(!picked.count(x) && !picked.count(y) && !picked.count(p.mate[x]) &&
                    !picked.count(p.mate[y]),
                "inverse_loop: auxiliary pair touches a picked pair");
        require(apoints.insert(x).second && apoints.insert(y).second,
                "inverse_loop: duplicate auxiliary pair");
    }

    const Multigraph g = to_multigraph(p);
    SwitchOutcome out;
    bool vd = false, ve = false;
    std::vector<int> verts;
    verts.reserve(static_cast<std::size_t>(4 * m));
    for (int gdx = 0; gdx < m; ++gdx) {
        const int v1 = p.bin_of[p.mate[s.picks[2 * gdx]]];      // mate of pick 2g-1
        const int v2 = p.bin_of[s.aux[gdx].first];
        const int v3 = p.bin_of[s.aux[gdx].second];
        const int v4 = p.bin_of[p.mate[s.picks[2 * gdx + 1]]];  // mate of pick 2g
        verts.insert(verts.end(), {v1, v2, v3, v4});
        if (adjacent(g, v1, v2) || adjacent(g, v3, v4)) ve = true;
    }
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) vd = true;
    if (vd) add_violation(out.violations, "d");
    if (ve) add_violation(out.violations, "e");
    out.good = out.violations.empty();

    Pairing r = p;
    for (int gdx = 0; gdx < m; ++gdx) {
        const std::int32_t a = s.picks[2 * gdx], b = s.picks[2 * gdx + 1];
        const std::int32_t am = p.mate[a], bm = p.mate[b];
        const auto [x, y] = s.aux[gdx];
        r.mate[a] = b;
        r.mate[b] = a;
        r.mate[am] = x;
        r.mate[x] = am;
        r.mate[y] = bm;
        r.mate[bm] = y;
    }
    std::map<int, long long> expected = signature_of(p).loops;
    expected[s.i] = m;
    out.effective = signature_of(r).loops == expected;
    out.result = std::move(r);
    return out;
}

InverseMultiSwitch induced_inverse(const MultiEdgeSwitch& s) {
    InverseMultiSwitch inv;
    inv.i = s.i;
    inv.j = s.j;
    for (const auto& [a, b] : s.targets) {
        inv.picks_i.push_back(a);
        inv.picks_j.push_back(b);
    }
    return inv;
}

MultiEdgeSwitch induced_forward(const Pairing& inverse_source,
                                const InverseMultiSwitch& s) {
    MultiEdgeSwitch fwd;
    fwd.i = s.i;
    fwd.j = s.j;
    for (std::size_t g = 0; g < s.picks_i.size(); ++g) {
        fwd.targets.push_back({s.picks_i[g], s.picks_j[g]});
        fwd.aux.push_back(
            {inverse_source.mate[s.picks_i[g]], inverse_source.mate[s.picks_j[g]]});
    }
    return fwd;
}

InverseLoopSwitch induced_inverse(const LoopSwitch& s) {
    InverseLoopSwitch inv;
    inv.i = s.i;
    for (std::size_t g = 0; g < s.loops.size(); ++g) {
        inv.picks.push_back(s.loops[g].first);
        inv.picks.push_back(s.loops[g].second);
        inv.aux.push_back({s.aux1[g].second, s.aux2[g].first});
    }
    return inv;
}

LoopSwitch induced_forward(const Pairing& inverse_source, const InverseLoopSwitch& s) {
    LoopSwitch fwd;
    fwd.i = s.i;
    for (std::size_t g = 0; g < s.aux.size(); ++g) {
        const std::int32_t a = s.picks[2 * g], b = s.picks[2 * g + 1];
        fwd.loops.push_back({a, b});
        fwd.aux1.push_back({inverse_source.mate[a], s.aux[g].first});
        fwd.aux2.push_back({s.aux[g].second, inverse_source.mate[b]});
    }
    return fwd;
}

std::vector<MultiEdgeSwitch> enumerate_forward_multi(const Pairing& p, int i, int j) {
    std::vector<MultiEdgeSwitch> out;
    std::vector<PointPair> targets;
    for (std::int32_t a = p.bin_start[i]; a < p.bin_start[i + 1]; ++a)
        if (p.bin_of[p.mate[a]] == j) targets.push_back({a, p.mate[a]});
    const int m = static_cast<int>(targets.size());
    if (m == 0) return out;

    std::vector<PointPair> others;
    for (const auto& pr : all_pairs(p)) {
        const int u = p.bin_of[pr.first], v = p.bin_of[pr.second];
        const bool is_target = (u == i && v == j) || (u == j && v == i);
        if (!is_target) others.push_back(pr);
    }

    std::sort(targets.begin(), targets.end());
    std::vector<PointPair> torder = targets;
    do {
        ordered_selections(others, m, [&](const std::vector<PointPair>& sel) {
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                MultiEdgeSwitch s;
                s.i = i;
                s.j = j;
                s.targets = torder;
                for (int g = 0; g < m; ++g) {
                    PointPair x = sel[static_cast<std::size_t>(g)];
                    if (mask & (1u << g)) std::swap(x.first, x.second);
                    s.aux.push_back(x);
                }
                out.push_back(std::move(s));
            }
        });
    } while (std::next_permutation(torder.begin(), torder.end()));
    return out;
}

std::vector<InverseMultiSwitch> enumerate_inverse_multi(const Pairing& p, int i, int j,
                                                        int m) {
    std::vector<InverseMultiSwitch> out;
    std::vector<std::int32_t> pts_i, pts_j;
    for (std::int32_t a = p.bin_start[i]; a < p.bin_start[i + 1]; ++a) pts_i.push_back(a);
    for (std::int32_t b = p.bin_start[j]; b < p.bin_start[j + 1]; ++b) pts_j.push_back(b);
    ordered_selections(pts_i, m, [&](const std::vector<std::int32_t>& pi) {
        ordered_selections(pts_j, m, [&](const std::vector<std::int32_t>& pj) {
            InverseMultiSwitch s;
            s.i = i;
            s.j = j;
            s.picks_i = pi;
            s.picks_j = pj;
            out.push_back(std::move(s));
        });
    });
    return out;
}

std::vector<LoopSwitch> enumerate_forward_loop(const Pairing& p, int i) {
    std::vector<LoopSwitch> out;
    std::vector<PointPair> loops;
    for (std::int32_t a = p.bin_start[i]; a < p.bin_start[i + 1]; ++a)
        if (p.mate[a] > a && p.bin_of[p.mate[a]] == i) loops.push_back({a, p.mate[a]});
    const int m = static_cast<int>(loops.size());
    if (m == 0) return out;

    std::vector<PointPair> others;
    for (const auto& pr : all_pairs(p))
        if (!(p.bin_of[pr.first] == i && p.bin_of[pr.second] == i)) others.push_back(pr);

    std::sort(loops.begin(), loops.end());
    std::vector<PointPair> lorder = loops;
    do {
        for (unsigned lmask = 0; lmask < (1u << m); ++lmask) {
            ordered_selections(others, 2 * m, [&](const std::vector<PointPair>& sel) {
                for (unsigned amask = 0; amask < (1u << (2 * m)); ++amask) {
                    LoopSwitch s;
                    s.i = i;
                    for (int g = 0; g < m; ++g) {
                        PointPair l = lorder[static_cast<std::size_t>(g)];
                        if (lmask & (1u << g)) std::swap(l.first, l.second);
                        s.loops.push_back(l);
                    }
                    for (int g = 0; g < 2 * m; ++g) {
                        PointPair x = sel[static_cast<std::size_t>(g)];
                        if (amask & (1u << g)) std::swap(x.first, x.second);
                        (g < m ? s.aux1 : s.aux2).push_back(x);
                    }
                    out.push_back(std::move(s));
                }
            });
        }
    } while (std::next_permutation(lorder.begin(), lorder.end()));
    return out;
}

std::vector<InverseLoopSwitch> enumerate_inverse_loop(const Pairing& p, int i, int m) {
    std::vector<InverseLoopSwitch> out;
    std::vector<std::int32_t> pts;
    for (std::int32_t a = p.bin_start[i]; a < p.bin_start[i + 1]; ++a) pts.push_back(a);
    ordered_selections(pts, 2 * m, [&](const std::vector<std::int32_t>& picks) {
        std::set<std::int32_t> blocked;
        for (std::int32_t a : picks) {
            blocked.insert(a);
            blocked.insert(p.mate[a]);
        }
        std::vector<PointPair> others;
        for (const auto& pr : all_pairs(p))
            if (!blocked.count(pr.first) && !blocked.count(pr.second)) others.push_back(pr);
        ordered_selections(others, m, [&](const std::vector<PointPair>& sel) {
            for (unsigned mask = 0; mask < (1u << m); ++mask) {
                InverseLoopSwitch s;
                s.i = i;
                s.picks = picks;
                for (int g = 0; g < m; ++g) {
                    PointPair x = sel[static_cast<std::size_t>(g)];
                    if (mask & (1u << g)) std::swap(x.first, x.second);
                    s.aux.push_back(x);
                }
                out.push_back(std::move(s));
            }
        });
    });
    return out;
}

CensusRatioReport census_ratio(const DegreeSequence& d, int i, int j, long long m,
                               const SignatureMatrix& rest) {
    if (i == j || i < 0 || j < 0 || i >= d.n() || j >= d.n())
        throw InvalidInput("census_ratio: i, j must be distinct vertices");
    if (m < 1) throw InvalidInput("census_ratio: m must be >= 1");
    const auto key = ordered(i, j);
    if (rest.multis.count(key))
        throw InvalidInput("census_ratio: rest must leave the (i, j) entry free");

    SignatureMatrix with_m = rest;
    if (m >= 2) with_m.multis[key] = m;

    CensusRatioReport r;
    r.i = key.first;
    r.j = key.second;
    r.m = m;
    enumerate_pairings(d, [&](const Pairing& p) {
        const SignatureMatrix sig = signature_of(p);
        const long long cnt = count_ij(p, key.first, key.second);
        if (sig == with_m && cnt == m) ++r.c_m;
        if (sig == rest) {
            if (cnt == 0) ++r.c_0;
            if (cnt == 1) ++r.c_1;
        }
    });
    r.c_star = r.c_0 + r.c_1;
    r.rho = r.c_0 > 0 ? static_cast<double>(r.c_m) / static_cast<double>(r.c_0)
                      : std::numeric_limits<double>::quiet_NaN();
    double pred = 1.0;
    const double m1 = static_cast<double>(d.m1());
    for (long long t = 0; t < m; ++t)
        pred *= static_cast<double>(d[i] - t) * static_cast<double>(d[j] - t) /
                (static_cast<double>(t + 1) * m1);
    r.prediction = std::max(0.0, pred);
    return r;
}

}  // namespace degseq
