#include "gentle/homology.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace gentle {

int SyzygyDecomposition::total_dim() const {
    int d = 0;
    if (left) d += left->module.total_dim();
    if (right) d += right->module.total_dim();
    for (const StringModule& m : middle) d += m.total_dim();
    return d;
}

std::vector<StringModule> SyzygyDecomposition::summands() const {
    std::vector<StringModule> s;
    if (left) s.push_back(left->module);
    for (const StringModule& m : middle) s.push_back(m);
    if (right) s.push_back(right->module);
    return s;
}

std::vector<StringModule> projective_cover(const GentleAlgebra& A, const StringModule& m) {
    std::vector<StringModule> cover;
    std::vector<int> vs = walk_vertices(A, m.word);
    for (int p : top_positions(m.word)) cover.push_back(projective(A, vs[p]));
    return cover;
}

SyzygyDecomposition syzygy(const GentleAlgebra& A, const StringModule& m) {
    SyzygyDecomposition d;
    auto ends = end_extension_arrows(A, m.word);
    if (ends.first) d.left = SyzygyEnd{*ends.first, r_module(A, *ends.first)};
    if (ends.second) d.right = SyzygyEnd{*ends.second, r_module(A, *ends.second)};

    SegmentDecomposition seg = segments(A, m.word);
    int k = seg.k();
    for (int i = 1; i <= k - 1; ++i) {
        /* interior valley: target of the i-th direct segment */
        const StringWord& dir = seg.segments[2 * i - 1];
        d.middle.push_back(projective(A, word_target(A, dir)));
    }
    return d;
}

namespace {

/* syzygy over the opposite algebra, with every module word translated back */
SyzygyDecomposition dualize(const GentleAlgebra& A, const GentleAlgebra& op,
                            const SyzygyDecomposition& s) {
    SyzygyDecomposition d;
    auto back = [&](const StringModule& m) { return string_module(A, dual_word(m.word)); };
    if (s.left) d.left = SyzygyEnd{s.left->arrow, back(s.left->module)};
    if (s.right) d.right = SyzygyEnd{s.right->arrow, back(s.right->module)};
    for (const StringModule& m : s.middle) d.middle.push_back(back(m));
    return d;
}

}  // namespace

SyzygyDecomposition cosyzygy(const GentleAlgebra& A, const StringModule& m) {
    GentleAlgebra op = opposite(A);
    StringModule md = string_module(op, dual_word(m.word));
    return dualize(A, op, syzygy(op, md));
}

std::optional<int> OmegaOrbit::at(int j) const {
    if (j < int(chain.size())) return chain[j];
    if (!cyclic) return std::nullopt;
    return chain[entry_index + (j - entry_index) % cycle_length];
}

OmegaOrbit omega_orbit(const GentleAlgebra& A, int arrow, int horizon) {
    OmegaOrbit o;
    std::vector<int> seen_at(A.num_arrows(), -1);
    int a = arrow;
    while (a >= 0 && int(o.chain.size()) < horizon) {
        if (seen_at[a] >= 0) {
            o.cyclic = true;
            o.entry_index = seen_at[a];
            o.cycle_length = int(o.chain.size()) - seen_at[a];
            assert(o.entry_index == 0);  /* rel_succ is a partial injection */
            return o;
        }
        seen_at[a] = int(o.chain.size());
        o.chain.push_back(a);
        a = A.relation_successor(a);
    }
    return o;
}

namespace {

std::optional<int> end_pd_steps(const GentleAlgebra& A, const SyzygyDecomposition& s) {
    /* largest j with Omega^j of an end summand nonzero; nullopt = infinite */
    int best = -1;
    for (const auto& e : {s.left, s.right}) {
        if (!e) continue;
        OmegaOrbit o = omega_orbit(A, e->arrow);
        if (o.cyclic) return std::nullopt;
        best = std::max(best, int(o.chain.size()) - 1);
    }
    if (best < 0) return -1;  /* no ends */
    return best;
}

}  // namespace

std::optional<int> proj_dim(const GentleAlgebra& A, const StringModule& m) {
    if (is_projective(A, m)) return 0;
    SyzygyDecomposition s = syzygy(A, m);
    auto steps = end_pd_steps(A, s);
    if (!steps) return std::nullopt;
    if (*steps < 0) return 1;  /* syzygy is projective (middles only) */
    return 1 + *steps;
}

std::optional<int> inj_dim(const GentleAlgebra& A, const StringModule& m) {
    GentleAlgebra op = opposite(A);
    return proj_dim(op, string_module(op, dual_word(m.word)));
}

Resolution resolution(const GentleAlgebra& A, const StringModule& m, int depth) {
    Resolution res;
    if (is_projective(A, m)) {
        ResolutionDegree d0;
        d0.proj_vertices.push_back(m.top[0]);
        res.degrees.push_back(std::move(d0));
        res.finite = true;
        return res;
    }

    /* degree 0: the cover of m itself */
    {
        ResolutionDegree d0;
        for (const StringModule& p : projective_cover(A, m)) d0.proj_vertices.push_back(p.top[0]);
        d0.syz = syzygy(A, m);
        res.degrees.push_back(std::move(d0));
    }

    const SyzygyDecomposition& s1 = res.degrees[0].syz;
    OmegaOrbit lo, ro;
    bool has_l = bool(s1.left), has_r = bool(s1.right);
    if (has_l) lo = omega_orbit(A, s1.left->arrow);
    if (has_r) ro = omega_orbit(A, s1.right->arrow);

    /* tail bookkeeping: an end either cycles from the start or dies after its
       chain runs out */
    if (!has_l && !has_r && s1.zero()) {
        res.finite = true;
        return res;
    }

    for (int d = 1; d <= depth; ++d) {
        ResolutionDegree deg;
        auto put_end = [&](bool has, const OmegaOrbit& o, std::optional<SyzygyEnd>& slot) {
            if (!has) return;
            auto cur = o.at(d - 1);
            if (!cur) return;
            /* cover of R(cur) is the projective at t(cur) */
            deg.proj_vertices.push_back(A.target(*cur));
            auto nxt = o.at(d);
            if (nxt) slot = SyzygyEnd{*nxt, r_module(A, *nxt)};
        };
        put_end(has_l, lo, deg.syz.left);
        if (d == 1)
            for (const StringModule& p : s1.middle) deg.proj_vertices.push_back(p.top[0]);
        put_end(has_r, ro, deg.syz.right);
        if (deg.proj_vertices.empty()) {
            res.finite = true;
            break;
        }
        res.degrees.push_back(std::move(deg));
    }

    bool l_cyc = has_l && lo.cyclic, r_cyc = has_r && ro.cyclic;
    if (l_cyc || r_cyc) {
        int period = 1;
        if (l_cyc) period = lo.cycle_length;
        if (r_cyc) period = l_cyc ? std::lcm(lo.cycle_length, ro.cycle_length) : ro.cycle_length;
        int dead = 0;  /* degree past which only cyclic ends contribute */
        if (has_l && !lo.cyclic) dead = std::max(dead, int(lo.chain.size()));
        if (has_r && !ro.cyclic) dead = std::max(dead, int(ro.chain.size()));
        res.tail = {std::max(1, dead + 1), period};
    } else if (!res.finite) {
        /* depth too small to finish; no tail claim */
    }
    return res;
}

SyzygyDecomposition band_syzygy(const GentleAlgebra& A, const BandModule& b) {
    SyzygyDecomposition d;
    const std::vector<Letter>& ls = b.band.letters;
    size_t n = ls.size();
    for (size_t i = 0; i < n; ++i) {
        /* valley between letter i and letter i+1 (cyclically) */
        if (!ls[i].inverse && ls[(i + 1) % n].inverse)
            d.middle.push_back(projective(A, letter_target(A, ls[i])));
    }
    return d;
}

SyzygyDecomposition band_cosyzygy(const GentleAlgebra& A, const BandModule& b) {
    GentleAlgebra op = opposite(A);
    SyzygyDecomposition s = band_syzygy(op, band_module(op, dual_band(op, b.band)));
    SyzygyDecomposition d;
    for (const StringModule& m : s.middle) d.middle.push_back(string_module(A, dual_word(m.word)));
    return d;
}

std::optional<int> gl_dim_status(const GentleAlgebra& A) {
    int best = 0;
    for (int v = 0; v < A.num_vertices(); ++v) {
        auto pd = proj_dim(A, simple(A, v));
        if (!pd) return std::nullopt;
        best = std::max(best, *pd);
    }
    return best;
}

}  // namespace gentle
