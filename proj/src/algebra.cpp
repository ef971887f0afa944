#include "gentle/algebra.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace gentle {

std::optional<int> GentleAlgebra::vertex_id(const std::string& name) const {
    auto it = std::lower_bound(vertex_names_.begin(), vertex_names_.end(), name);
    if (it == vertex_names_.end() || *it != name) return std::nullopt;
    return int(it - vertex_names_.begin());
}

std::optional<int> GentleAlgebra::arrow_id(const std::string& name) const {
    auto it = std::lower_bound(arrows_.begin(), arrows_.end(), name,
                               [](const Arrow& a, const std::string& n) { return a.name < n; });
    if (it == arrows_.end() || it->name != name) return std::nullopt;
    return int(it - arrows_.begin());
}

bool GentleAlgebra::in_ideal(int first, int second) const {
    return std::binary_search(relations_.begin(), relations_.end(), std::make_pair(first, second));
}

int GentleAlgebra::cycle_length_of(int a) const {
    int c = cycle_of_[a];
    return c < 0 ? 0 : int(relation_cycles_[c].size());
}

Presentation GentleAlgebra::to_presentation() const {
    Presentation p;
    p.vertices = vertex_names_;
    for (const Arrow& a : arrows_)
        p.arrows.push_back({a.name, vertex_names_[a.source], vertex_names_[a.target]});
    for (auto [f, s] : relations_)
        p.relations.emplace_back(arrows_[f].name, arrows_[s].name);
    return p;
}

GentleAlgebra validate_gentle(const Presentation& p) {
    GentleAlgebra A;

    A.vertex_names_ = p.vertices;
    std::sort(A.vertex_names_.begin(), A.vertex_names_.end());
    for (size_t i = 1; i < A.vertex_names_.size(); ++i)
        if (A.vertex_names_[i] == A.vertex_names_[i - 1])
            throw validation_error("duplicate vertex name: " + A.vertex_names_[i]);

    std::vector<Presentation::RawArrow> raw = p.arrows;
    std::sort(raw.begin(), raw.end(),
              [](const auto& x, const auto& y) { return x.name < y.name; });
    for (size_t i = 1; i < raw.size(); ++i)
        if (raw[i].name == raw[i - 1].name)
            throw validation_error("duplicate arrow name: " + raw[i].name);

    for (const auto& ra : raw) {
        GentleAlgebra::Arrow a;
        a.name = ra.name;
        auto s = A.vertex_id(ra.source), t = A.vertex_id(ra.target);
        if (!s) throw validation_error("arrow " + ra.name + ": unknown source vertex " + ra.source);
        if (!t) throw validation_error("arrow " + ra.name + ": unknown target vertex " + ra.target);
        a.source = *s;
        a.target = *t;
        A.arrows_.push_back(a);
    }

    const int nv = A.num_vertices(), na = A.num_arrows();
    A.out_.assign(nv, {});
    A.in_.assign(nv, {});
    for (int i = 0; i < na; ++i) {
        A.out_[A.arrows_[i].source].push_back(i);
        A.in_[A.arrows_[i].target].push_back(i);
    }
    for (int v = 0; v < nv; ++v) {
        if (A.out_[v].size() > 2)
            throw validation_error("vertex " + A.vertex_names_[v] + ": more than 2 outgoing arrows");
        if (A.in_[v].size() > 2)
            throw validation_error("vertex " + A.vertex_names_[v] + ": more than 2 incoming arrows");
    }

    for (auto [fn, sn] : p.relations) {
        auto f = A.arrow_id(fn), s = A.arrow_id(sn);
        if (!f) throw validation_error("relation names unknown arrow " + fn);
        if (!s) throw validation_error("relation names unknown arrow " + sn);
        if (A.arrows_[*f].target != A.arrows_[*s].source)
            throw validation_error("relation " + fn + " " + sn + ": arrows do not compose");
        A.relations_.emplace_back(*f, *s);
    }
    std::sort(A.relations_.begin(), A.relations_.end());
    for (size_t i = 1; i < A.relations_.size(); ++i)
        if (A.relations_[i] == A.relations_[i - 1])
            throw validation_error("duplicate relation " + A.arrows_[A.relations_[i].first].name +
                                   " " + A.arrows_[A.relations_[i].second].name);

    A.direct_succ_.assign(na, -1);
    A.rel_succ_.assign(na, -1);
    A.direct_pred_.assign(na, -1);
    A.rel_pred_.assign(na, -1);
    for (int a = 0; a < na; ++a) {
        for (int b : A.out_[A.arrows_[a].target]) {
            if (A.in_ideal(a, b)) {
                if (A.rel_succ_[a] >= 0)
                    throw validation_error("arrow " + A.arrows_[a].name +
                                           ": two arrows b with (a b) in the ideal");
                A.rel_succ_[a] = b;
            } else {
                if (A.direct_succ_[a] >= 0)
                    throw validation_error("arrow " + A.arrows_[a].name +
                                           ": two arrows b with (a b) outside the ideal");
                A.direct_succ_[a] = b;
            }
        }
        for (int g : A.in_[A.arrows_[a].source]) {
            if (A.in_ideal(g, a)) {
                if (A.rel_pred_[a] >= 0)
                    throw validation_error("arrow " + A.arrows_[a].name +
                                           ": two arrows g with (g a) in the ideal");
                A.rel_pred_[a] = g;
            } else {
                if (A.direct_pred_[a] >= 0)
                    throw validation_error("arrow " + A.arrows_[a].name +
                                           ": two arrows g with (g a) outside the ideal");
                A.direct_pred_[a] = g;
            }
        }
    }

    /* finite dimensionality: the direct-successor graph must be acyclic */
    {
        std::vector<int> state(na, 0);
        for (int a0 = 0; a0 < na; ++a0) {
            if (state[a0] != 0) continue;
            int a = a0;
            std::vector<int> path;
            while (a >= 0 && state[a] == 0) {
                state[a] = 1;
                path.push_back(a);
                a = A.direct_succ_[a];
            }
            if (a >= 0 && state[a] == 1)
                throw validation_error("composable cycle without relation through arrow " +
                                       A.arrows_[a].name + " (infinite-dimensional algebra)");
            for (int x : path) state[x] = 2;
        }
    }

    /* relation cycles: cycles of the partial injection rel_succ */
    A.cycle_of_.assign(na, -1);
    {
        std::vector<int> state(na, 0);
        for (int a0 = 0; a0 < na; ++a0) {
            if (state[a0] != 0) continue;
            std::vector<int> path;
            int a = a0;
            while (a >= 0 && state[a] == 0) {
                state[a] = 1;
                path.push_back(a);
                a = A.rel_succ_[a];
            }
            if (a >= 0 && state[a] == 1) {
                /* the tail of `path` from the first occurrence of a is a cycle */
                size_t start = 0;
                while (path[start] != a) ++start;
                std::vector<int> cyc(path.begin() + start, path.end());
                /* canonical rotation: smallest arrow id first */
                size_t mi = 0;
                for (size_t i = 1; i < cyc.size(); ++i)
                    if (cyc[i] < cyc[mi]) mi = i;
                std::rotate(cyc.begin(), cyc.begin() + mi, cyc.end());
                for (int x : cyc) A.cycle_of_[x] = int(A.relation_cycles_.size());
                A.relation_cycles_.push_back(cyc);
            }
            for (int x : path) state[x] = 2;
        }
        std::sort(A.relation_cycles_.begin(), A.relation_cycles_.end());
        for (size_t c = 0; c < A.relation_cycles_.size(); ++c)
            for (int x : A.relation_cycles_[c]) A.cycle_of_[x] = int(c);
    }

    return A;
}

GentleAlgebra opposite(const GentleAlgebra& a) {
    Presentation p = a.to_presentation();
    for (auto& ra : p.arrows) std::swap(ra.source, ra.target);
    for (auto& r : p.relations) std::swap(r.first, r.second);
    return validate_gentle(p);
}

GentleAlgebra random_gentle(uint64_t seed, int max_vertices, int max_arrows) {
    if (max_vertices < 1 || max_arrows < 0)
        throw validation_error("random_gentle: infeasible bounds");
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) {  /* inclusive */
        return lo + int(rng() % uint64_t(hi - lo + 1));
    };

    for (int attempt = 0; attempt < 200; ++attempt) {
        Presentation p;
        int nv = pick(1, max_vertices);
        for (int v = 0; v < nv; ++v) p.vertices.push_back("v" + std::to_string(v + 1));

        int want = max_arrows == 0 ? 0 : pick(0, max_arrows);
        std::vector<int> outdeg(nv, 0), indeg(nv, 0);
        struct E {
            int s, t;
        };
        std::vector<E> edges;
        int tries = 0;
        while (int(edges.size()) < want && tries < 20 * (want + 1)) {
            ++tries;
            int s = pick(0, nv - 1), t = pick(0, nv - 1);
            if (outdeg[s] >= 2 || indeg[t] >= 2) continue;
            outdeg[s]++;
            indeg[t]++;
            edges.push_back({s, t});
        }
        for (size_t i = 0; i < edges.size(); ++i)
            p.arrows.push_back({"a" + std::to_string(i + 1), p.vertices[edges[i].s],
                                p.vertices[edges[i].t]});

        /* assign each composable pair (g then a) at a vertex to one of
           {composable, relation}; with valence <= 2 the per-arrow uniqueness
           constraints make every assignment a 2-coloring of a grid whose rows
           and columns each carry at most one of each color */
        bool ok = true;
        for (int v = 0; v < nv && ok; ++v) {
            std::vector<int> ins, outs;
            for (size_t i = 0; i < edges.size(); ++i) {
                if (edges[i].t == v) ins.push_back(int(i));
                if (edges[i].s == v) outs.push_back(int(i));
            }
            if (ins.empty() || outs.empty()) continue;
            /* flip = 0 or 1 decides the diagonal pattern */
            int flip = pick(0, 1);
            for (size_t gi = 0; gi < ins.size(); ++gi)
                for (size_t ai = 0; ai < outs.size(); ++ai) {
                    bool rel;
                    if (ins.size() == 1 && outs.size() == 1)
                        rel = flip == 1;
                    else
                        rel = int((gi + ai) % 2) == flip;
                    if (rel)
                        p.relations.emplace_back("a" + std::to_string(ins[gi] + 1),
                                                 "a" + std::to_string(outs[ai] + 1));
                }
        }
        try {
            return validate_gentle(p);
        } catch (const validation_error&) {
            /* relation-free composable cycle: resample */
            continue;
        }
    }
    throw validation_error("random_gentle: retry budget exhausted");
}

}  // namespace gentle
