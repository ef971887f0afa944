#include "gentle/strings.hpp"

#include <algorithm>
#include <sstream>

namespace gentle {

int letter_source(const GentleAlgebra& A, Letter l) {
    return l.inverse ? A.target(l.arrow) : A.source(l.arrow);
}

int letter_target(const GentleAlgebra& A, Letter l) {
    return l.inverse ? A.source(l.arrow) : A.target(l.arrow);
}

StringWord trivial_word(int vertex) {
    StringWord w;
    w.base = vertex;
    return w;
}

int word_source(const StringWord& w) { return w.base; }

int word_target(const GentleAlgebra& A, const StringWord& w) {
    return w.trivial() ? w.base : letter_target(A, w.letters.back());
}

bool letters_compose(const GentleAlgebra& A, Letter x, Letter y) {
    if (letter_target(A, x) != letter_source(A, y)) return false;
    if (y == inv(x)) return false;
    if (!x.inverse && !y.inverse && A.in_ideal(x.arrow, y.arrow)) return false;
    if (x.inverse && y.inverse && A.in_ideal(y.arrow, x.arrow)) return false;
    return true;
}

std::optional<std::string> word_violation(const GentleAlgebra& A, const std::vector<Letter>& ls) {
    for (size_t i = 0; i + 1 < ls.size(); ++i) {
        Letter x = ls[i], y = ls[i + 1];
        std::string pair = (x.inverse ? "-" : "") + A.arrow_name(x.arrow) + " " +
                           (y.inverse ? "-" : "") + A.arrow_name(y.arrow);
        if (letter_target(A, x) != letter_source(A, y)) return "endpoint mismatch at \"" + pair + "\"";
        if (y == inv(x)) return "backtrack at \"" + pair + "\"";
        if (!x.inverse && !y.inverse && A.in_ideal(x.arrow, y.arrow))
            return "relation " + A.arrow_name(x.arrow) + " " + A.arrow_name(y.arrow) + " violated";
        if (x.inverse && y.inverse && A.in_ideal(y.arrow, x.arrow))
            return "relation " + A.arrow_name(y.arrow) + " " + A.arrow_name(x.arrow) + " violated";
    }
    return std::nullopt;
}

StringWord make_word(const GentleAlgebra& A, std::vector<Letter> letters) {
    if (letters.empty()) throw string_error("make_word: empty letter list needs a base vertex");
    if (auto err = word_violation(A, letters)) throw string_error(*err);
    StringWord w;
    w.base = letter_source(A, letters.front());
    w.letters = std::move(letters);
    return w;
}

StringWord parse_string(const GentleAlgebra& A, const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<std::string> toks;
    while (in >> tok) toks.push_back(tok);
    if (toks.empty()) throw string_error("empty string literal");
    if (toks[0][0] == '@') {
        if (toks.size() != 1) throw string_error("trivial string token must stand alone");
        auto v = A.vertex_id(toks[0].substr(1));
        if (!v) throw string_error("unknown vertex in \"" + toks[0] + "\"");
        return trivial_word(*v);
    }
    std::vector<Letter> ls;
    for (const std::string& t : toks) {
        bool inverse = t[0] == '-';
        std::string name = inverse ? t.substr(1) : t;
        auto a = A.arrow_id(name);
        if (!a) throw string_error("unknown arrow \"" + name + "\"");
        ls.push_back({*a, inverse});
    }
    return make_word(A, std::move(ls));
}

std::string render_word(const GentleAlgebra& A, const StringWord& w) {
    if (w.trivial()) return "@" + A.vertex_name(w.base);
    std::string out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        if (w.letters[i].inverse) out += '-';
        out += A.arrow_name(w.letters[i].arrow);
    }
    return out;
}

StringWord invert(const GentleAlgebra& A, const StringWord& w) {
    StringWord r;
    r.base = word_target(A, w);
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(inv(*it));
    return r;
}

namespace {
/* direct letters sort before inverse ones, then by arrow index */
int letter_key(Letter l) { return l.arrow * 2 + (l.inverse ? 1 : 0); }
}  // namespace

bool word_less(const StringWord& a, const StringWord& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
    for (size_t i = 0; i < a.letters.size(); ++i) {
        int ka = letter_key(a.letters[i]), kb = letter_key(b.letters[i]);
        if (ka != kb) return ka < kb;
    }
    return a.base < b.base;
}

StringWord canonical_form(const GentleAlgebra& A, const StringWord& w) {
    StringWord r = invert(A, w);
    return word_less(r, w) ? r : w;
}

SegmentDecomposition segments(const GentleAlgebra& A, const StringWord& w) {
    SegmentDecomposition d;
    if (w.trivial()) {
        d.segments = {trivial_word(w.base), trivial_word(w.base)};
        return d;
    }
    std::vector<StringWord> runs;
    size_t i = 0;
    while (i < w.letters.size()) {
        size_t j = i;
        while (j < w.letters.size() && w.letters[j].inverse == w.letters[i].inverse) ++j;
        StringWord seg;
        seg.base = letter_source(A, w.letters[i]);
        seg.letters.assign(w.letters.begin() + i, w.letters.begin() + j);
        runs.push_back(std::move(seg));
        i = j;
    }
    if (!runs.front().letters.front().inverse) runs.insert(runs.begin(), trivial_word(w.base));
    if (runs.back().letters.empty() || runs.back().letters.front().inverse)
        runs.push_back(trivial_word(word_target(A, w)));
    d.segments = std::move(runs);
    return d;
}

std::vector<int> walk_vertices(const GentleAlgebra& A, const StringWord& w) {
    std::vector<int> vs;
    vs.push_back(w.base);
    for (Letter l : w.letters) vs.push_back(letter_target(A, l));
    return vs;
}

std::vector<int> top_positions(const StringWord& w) {
    std::vector<int> ps;
    int n = w.length();
    for (int i = 0; i <= n; ++i) {
        bool left_in = i > 0 && !w.letters[i - 1].inverse;
        bool right_in = i < n && w.letters[i].inverse;
        if (!left_in && !right_in) ps.push_back(i);
    }
    return ps;
}

std::vector<int> socle_positions(const StringWord& w) {
    std::vector<int> ps;
    int n = w.length();
    for (int i = 0; i <= n; ++i) {
        bool left_out = i > 0 && w.letters[i - 1].inverse;
        bool right_out = i < n && !w.letters[i].inverse;
        if (!left_out && !right_out) ps.push_back(i);
    }
    return ps;
}

std::vector<int> left_extension_arrows(const GentleAlgebra& A, const StringWord& w) {
    std::vector<int> out;
    if (w.trivial()) return A.arrows_out(w.base);
    for (int d : A.arrows_out(w.base))
        if (letters_compose(A, Letter{d, true}, w.letters.front())) out.push_back(d);
    return out;
}

std::vector<int> right_extension_arrows(const GentleAlgebra& A, const StringWord& w) {
    std::vector<int> out;
    if (w.trivial()) return A.arrows_out(w.base);
    int t = word_target(A, w);
    for (int d : A.arrows_out(t))
        if (letters_compose(A, w.letters.back(), Letter{d, false})) out.push_back(d);
    return out;
}

std::pair<std::optional<int>, std::optional<int>> end_extension_arrows(const GentleAlgebra& A,
                                                                       const StringWord& w) {
    std::pair<std::optional<int>, std::optional<int>> ends;
    if (w.trivial()) {
        const std::vector<int>& outs = A.arrows_out(w.base);
        if (!outs.empty()) ends.first = outs[0];
        if (outs.size() > 1) ends.second = outs[1];
        return ends;
    }
    std::vector<int> l = left_extension_arrows(A, w), r = right_extension_arrows(A, w);
    if (!l.empty()) ends.first = l[0];
    if (!r.empty()) ends.second = r[0];
    return ends;
}

std::pair<std::optional<int>, std::optional<int>> minimally_ends_in_cycle(const GentleAlgebra& A,
                                                                          const StringWord& w) {
    auto ends = end_extension_arrows(A, w);
    if (ends.first && !A.on_relation_cycle(*ends.first)) ends.first.reset();
    if (ends.second && !A.on_relation_cycle(*ends.second)) ends.second.reset();
    return ends;
}

StringWord direct_path_from(const GentleAlgebra& A, int arrow) {
    StringWord w;
    w.base = A.source(arrow);
    for (int a = arrow; a >= 0; a = A.direct_successor(a)) w.letters.push_back({a, false});
    return w;
}

StringWord direct_path_ending_at(const GentleAlgebra& A, int arrow) {
    std::vector<Letter> ls;
    for (int a = arrow; a >= 0; a = A.direct_predecessor(a)) ls.push_back({a, false});
    std::reverse(ls.begin(), ls.end());
    StringWord w;
    w.base = A.source(ls.front().arrow);
    w.letters = std::move(ls);
    return w;
}

StringWord maximal_direct_path_after(const GentleAlgebra& A, int arrow) {
    int e = A.direct_successor(arrow);
    if (e < 0) return trivial_word(A.target(arrow));
    return direct_path_from(A, e);
}

namespace {

bool cyclic_pair_ok(const GentleAlgebra& A, const std::vector<Letter>& ls) {
    size_t n = ls.size();
    for (size_t i = 0; i < n; ++i)
        if (!letters_compose(A, ls[i], ls[(i + 1) % n])) return false;
    return true;
}

std::vector<Letter> rotate_letters(const std::vector<Letter>& ls, size_t by) {
    std::vector<Letter> r(ls.begin() + by, ls.end());
    r.insert(r.end(), ls.begin(), ls.begin() + by);
    return r;
}

bool letters_less(const std::vector<Letter>& a, const std::vector<Letter>& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int ka = a[i].arrow * 2 + (a[i].inverse ? 1 : 0);
        int kb = b[i].arrow * 2 + (b[i].inverse ? 1 : 0);
        if (ka != kb) return ka < kb;
    }
    return a.size() < b.size();
}

}  // namespace

Band validate_band(const GentleAlgebra& A, const std::vector<Letter>& letters) {
    if (letters.empty()) throw string_error("band: empty word");
    size_t n = letters.size();
    for (size_t i = 0; i < n; ++i) {
        Letter x = letters[i], y = letters[(i + 1) % n];
        if (!letters_compose(A, x, y)) {
            std::string pair = (x.inverse ? "-" : "") + A.arrow_name(x.arrow) + " " +
                               (y.inverse ? "-" : "") + A.arrow_name(y.arrow);
            throw string_error("band: not cyclically composable at \"" + pair + "\"");
        }
    }
    bool has_direct = false, has_inverse = false;
    for (Letter l : letters) (l.inverse ? has_inverse : has_direct) = true;
    if (!has_direct || !has_inverse)
        throw string_error(has_direct ? "band: all letters direct" : "band: all letters inverse");
    for (size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        if (rotate_letters(letters, d) == letters) throw string_error("band: proper power of a shorter word");
    }

    std::vector<Letter> best = letters;
    std::vector<Letter> inv_ls;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) inv_ls.push_back(inv(*it));
    for (size_t r = 0; r < n; ++r) {
        for (const std::vector<Letter>* cand : {&letters, &inv_ls}) {
            std::vector<Letter> rot = rotate_letters(*cand, r);
            if (letters_less(rot, best)) best = std::move(rot);
        }
    }
    Band b;
    b.letters = std::move(best);
    return b;
}

Band parse_band(const GentleAlgebra& A, const std::string& text) {
    std::string body = text;
    const std::string prefix = "band:";
    if (body.rfind(prefix, 0) == 0) body = body.substr(prefix.size());
    std::istringstream in(body);
    std::string tok;
    std::vector<Letter> ls;
    while (in >> tok) {
        bool inverse = tok[0] == '-';
        std::string name = inverse ? tok.substr(1) : tok;
        auto a = A.arrow_id(name);
        if (!a) throw string_error("unknown arrow \"" + name + "\"");
        ls.push_back({*a, inverse});
    }
    return validate_band(A, ls);
}

std::string render_band(const GentleAlgebra& A, const Band& b) {
    std::string out = "band:";
    for (size_t i = 0; i < b.letters.size(); ++i) {
        out += ' ';
        if (b.letters[i].inverse) out += '-';
        out += A.arrow_name(b.letters[i].arrow);
    }
    return out;
}

StringWord dual_word(const StringWord& w) {
    StringWord r = w;
    for (Letter& l : r.letters) l.inverse = !l.inverse;
    return r;
}

Band dual_band(const GentleAlgebra& A_op, const Band& b) {
    std::vector<Letter> ls = b.letters;
    for (Letter& l : ls) l.inverse = !l.inverse;
    return validate_band(A_op, ls);
}

}  // namespace gentle
