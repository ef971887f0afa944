#include "gentle/ext.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gentle {

namespace {

std::vector<StringWord> orientations(const GentleAlgebra& A, const StringWord& w) {
    if (w.trivial()) return {w};
    return {w, invert(A, w)};
}

StringWord concat_checked(const GentleAlgebra& A, std::vector<Letter> letters, int base_if_empty) {
    StringWord w;
    if (letters.empty()) {
        w.base = base_if_empty;
        return w;
    }
    if (word_violation(A, letters)) {
        w.base = -1;  /* marks invalid */
        return w;
    }
    w.base = letter_source(A, letters.front());
    w.letters = std::move(letters);
    return w;
}

std::vector<Letter> slice(const StringWord& w, int from, int to) {
    return std::vector<Letter>(w.letters.begin() + from, w.letters.begin() + to);
}

struct WordKey {
    std::vector<int> k;
    explicit WordKey(const StringWord& w) {
        k.push_back(w.trivial() ? w.base : -1);
        for (Letter l : w.letters) k.push_back(l.arrow * 2 + (l.inverse ? 1 : 0));
    }
    bool operator<(const WordKey& o) const { return k < o.k; }
    bool operator==(const WordKey& o) const { return k == o.k; }
};

}  // namespace

std::vector<ExtBasisElement> arrow_extensions(const GentleAlgebra& A, const StringWord& v,
                                              const StringWord& w) {
    std::vector<ExtBasisElement> out;
    std::set<WordKey> seen;
    for (const StringWord& wp : orientations(A, w)) {
        for (const StringWord& vp : orientations(A, v)) {
            int wt = word_target(A, wp);
            for (int b : A.arrows_in(wt)) {
                Letter bl{b, true};
                if (!wp.trivial() && !letters_compose(A, wp.letters.back(), bl)) continue;
                if (letter_target(A, bl) != word_source(vp)) continue;
                if (!vp.trivial() && !letters_compose(A, bl, vp.letters.front())) continue;
                std::vector<Letter> mid = wp.letters;
                mid.push_back(bl);
                mid.insert(mid.end(), vp.letters.begin(), vp.letters.end());
                StringWord mw = canonical_form(A, make_word(A, std::move(mid)));
                if (!seen.insert(WordKey(mw)).second) continue;
                ExtBasisElement e;
                e.kind = ExtBasisElement::Kind::arrow;
                e.arrow = b;
                e.middles = {mw};
                out.push_back(std::move(e));
            }
        }
    }
    return out;
}

namespace {

/* alignment of a common factor: orientation flags plus start positions */
struct Alignment {
    int vo, vi, wo, wi, len;
    bool operator<(const Alignment& o) const {
        return std::tie(vo, vi, wo, wi, len) < std::tie(o.vo, o.vi, o.wo, o.wi, o.len);
    }
};

Alignment mirrored(const Alignment& a, int vlen, int wlen, bool vtriv, bool wtriv) {
    Alignment m;
    m.vo = vtriv ? 0 : 1 - a.vo;
    m.wo = wtriv ? 0 : 1 - a.wo;
    m.vi = vlen - a.vi - a.len;
    m.wi = wlen - a.wi - a.len;
    m.len = a.len;
    return m;
}

}  // namespace

std::vector<ExtBasisElement> overlap_extensions(const GentleAlgebra& A, const StringWord& v,
                                                const StringWord& w) {
    std::vector<ExtBasisElement> out;
    std::vector<StringWord> vos = orientations(A, v), wos = orientations(A, w);
    const int vlen = v.length(), wlen = w.length();

    StringWord v_can = canonical_form(A, v), w_can = canonical_form(A, w);

    std::set<Alignment> done;
    for (int vo = 0; vo < int(vos.size()); ++vo) {
        const StringWord& vp = vos[vo];
        std::vector<int> v_verts = walk_vertices(A, vp);
        for (int wo = 0; wo < int(wos.size()); ++wo) {
            const StringWord& wp = wos[wo];
            std::vector<int> w_verts = walk_vertices(A, wp);
            for (int len = 0; len <= std::min(vlen, wlen); ++len) {
                for (int vi = 0; vi + len <= vlen; ++vi) {
                    for (int wi = 0; wi + len <= wlen; ++wi) {
                        /* equal factors, including the base vertex when trivial */
                        if (len == 0 && v_verts[vi] != w_verts[wi]) continue;
                        bool match = true;
                        for (int t = 0; t < len && match; ++t)
                            match = vp.letters[vi + t] == wp.letters[wi + t];
                        if (!match) continue;

                        /* boundary letters with the displayed directions */
                        bool hasB = vi > 0, hasA = vi + len < vlen;
                        bool hasD = wi > 0, hasC = wi + len < wlen;
                        if (hasB && vp.letters[vi - 1].inverse) continue;       /* B direct */
                        if (hasA && !vp.letters[vi + len].inverse) continue;    /* A inverse */
                        if (hasD && !wp.letters[wi - 1].inverse) continue;      /* D inverse */
                        if (hasC && wp.letters[wi + len].inverse) continue;     /* C direct */
                        if (!hasB && !hasD) continue;  /* split: middle = v + w */
                        if (!hasA && !hasC) continue;

                        Alignment al{vo, vi, wo, wi, len};
                        Alignment mir = mirrored(al, vlen, wlen, v.trivial(), w.trivial());
                        if (done.count(mir)) continue;
                        done.insert(al);

                        /* E1 = v_L B m C w_R, E2 = w_L D^-1 m A^-1 v_R */
                        std::vector<Letter> e1 = slice(vp, 0, vi + len);
                        {
                            auto tail = slice(wp, wi + len, wlen);
                            e1.insert(e1.end(), tail.begin(), tail.end());
                        }
                        std::vector<Letter> e2 = slice(wp, 0, wi + len);
                        {
                            auto tail = slice(vp, vi + len, vlen);
                            e2.insert(e2.end(), tail.begin(), tail.end());
                        }
                        StringWord E1 = concat_checked(A, std::move(e1), v_verts[vi]);
                        StringWord E2 = concat_checked(A, std::move(e2), v_verts[vi]);
                        if (E1.base < 0 || E2.base < 0) continue;
                        StringWord c1 = canonical_form(A, E1), c2 = canonical_form(A, E2);

                        /* a sequence with middle isomorphic to M(v) + M(w)
                           is split */
                        {
                            std::vector<WordKey> mid{WordKey(c1), WordKey(c2)};
                            std::vector<WordKey> vw{WordKey(v_can), WordKey(w_can)};
                            std::sort(mid.begin(), mid.end());
                            std::sort(vw.begin(), vw.end());
                            if (mid == vw) continue;
                        }

                        ExtBasisElement e;
                        e.kind = ExtBasisElement::Kind::overlap;
                        StringWord m;
                        if (len == 0)
                            m = trivial_word(v_verts[vi]);
                        else {
                            m.base = v_verts[vi];
                            m.letters = slice(vp, vi, vi + len);
                        }
                        e.overlap_m = m;
                        e.middles = {c1, c2};
                        out.push_back(std::move(e));
                    }
                }
            }
        }
    }
    return out;
}

int ext1_dim(const GentleAlgebra& A, const StringModule& m, const StringModule& n,
             std::vector<ExtBasisElement>* basis) {
    std::vector<ExtBasisElement> arr = arrow_extensions(A, m.word, n.word);
    std::vector<ExtBasisElement> ovl = overlap_extensions(A, m.word, n.word);
    int dim = int(arr.size() + ovl.size());
    if (basis) {
        *basis = std::move(arr);
        basis->insert(basis->end(), ovl.begin(), ovl.end());
    }
    return dim;
}

Ext1FromR ext1_from_R(const GentleAlgebra& A, int alpha, const StringWord& w) {
    Ext1FromR r;
    int beta = A.relation_successor(alpha);
    if (beta < 0) return r;
    r.beta = beta;
    StringWord p = maximal_direct_path_after(A, alpha);
    Letter bl{beta, true};
    for (const StringWord& wp : orientations(A, w)) {
        if (word_target(A, wp) != A.target(beta)) continue;
        if (!wp.trivial() && !letters_compose(A, wp.letters.back(), bl)) continue;
        /* junction with p never fails: p starts with the direct successor of
           alpha, which differs from beta */
        std::vector<Letter> mid = wp.letters;
        mid.push_back(bl);
        mid.insert(mid.end(), p.letters.begin(), p.letters.end());
        r.middles.push_back(canonical_form(A, make_word(A, std::move(mid))));
        r.dim++;
    }
    return r;
}

int ext_dim(const GentleAlgebra& A, const StringModule& m, const StringModule& n, int degree) {
    if (degree < 1) throw std::invalid_argument("ext_dim: degree must be >= 1");
    if (degree == 1) return ext1_dim(A, m, n);
    SyzygyDecomposition s = syzygy(A, m);
    int total = 0;
    for (const auto& e : {s.left, s.right}) {
        if (!e) continue;
        OmegaOrbit o = omega_orbit(A, e->arrow);
        if (auto a = o.at(degree - 2)) total += ext1_from_R(A, *a, n.word).dim;
    }
    return total;
}

std::vector<int> ext_dims(const GentleAlgebra& A, const StringModule& m, const StringModule& n,
                          int max_degree) {
    std::vector<int> dims;
    if (max_degree < 1) return dims;
    dims.push_back(ext1_dim(A, m, n));
    SyzygyDecomposition s = syzygy(A, m);
    std::vector<OmegaOrbit> orbits;
    for (const auto& e : {s.left, s.right})
        if (e) orbits.push_back(omega_orbit(A, e->arrow));
    for (int d = 2; d <= max_degree; ++d) {
        int total = 0;
        for (const OmegaOrbit& o : orbits)
            if (auto a = o.at(d - 2)) total += ext1_from_R(A, *a, n.word).dim;
        dims.push_back(total);
    }
    return dims;
}

std::vector<StringWord> ext_basis_strings(const GentleAlgebra& A, const StringModule& m,
                                          const StringModule& n, int degree) {
    if (degree < 2) throw std::invalid_argument("ext_basis_strings: degree must be >= 2");
    SyzygyDecomposition s = syzygy(A, m);
    std::vector<StringWord> out;
    for (const auto& e : {s.left, s.right}) {
        if (!e) continue;
        OmegaOrbit o = omega_orbit(A, e->arrow);
        if (auto a = o.at(degree - 2)) {
            Ext1FromR r = ext1_from_R(A, *a, n.word);
            out.insert(out.end(), r.middles.begin(), r.middles.end());
        }
    }
    return out;
}

int ExtSequence::dim_at(int degree) const {
    if (degree <= int(prefix.size())) return prefix[degree - 1];
    if (period == 0) return 0;
    return block[(degree - int(prefix.size()) - 1) % period];
}

ExtSequence ext_sequence(const GentleAlgebra& A, const StringModule& m, const StringModule& n) {
    ExtSequence seq;
    SyzygyDecomposition s = syzygy(A, m);
    std::vector<OmegaOrbit> orbits;
    for (const auto& e : {s.left, s.right})
        if (e) orbits.push_back(omega_orbit(A, e->arrow));

    int n0 = 2;
    int period = 0;
    for (const OmegaOrbit& o : orbits) {
        if (o.cyclic)
            period = period == 0 ? o.cycle_length : std::lcm(period, o.cycle_length);
        else
            n0 = std::max(n0, 2 + int(o.chain.size()) - 1);
    }

    auto dim_at_degree = [&](int d) {
        if (d == 1) return ext1_dim(A, m, n);
        int total = 0;
        for (const OmegaOrbit& o : orbits)
            if (auto a = o.at(d - 2)) total += ext1_from_R(A, *a, n.word).dim;
        return total;
    };

    for (int d = 1; d < n0; ++d) seq.prefix.push_back(dim_at_degree(d));
    if (period > 0) {
        bool nonzero = false;
        for (int t = 0; t < period; ++t) {
            seq.block.push_back(dim_at_degree(n0 + t));
            nonzero = nonzero || seq.block.back() != 0;
        }
        if (nonzero)
            seq.period = period;
        else
            seq.block.clear();
    }
    return seq;
}

}  // namespace gentle
