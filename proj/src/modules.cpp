#include "gentle/modules.hpp"

#include <algorithm>

namespace gentle {

StringModule string_module(const GentleAlgebra& A, const StringWord& w) {
    StringModule m;
    m.word = canonical_form(A, w);
    m.dim_vector.assign(A.num_vertices(), 0);
    std::vector<int> vs = walk_vertices(A, m.word);
    for (int v : vs) m.dim_vector[v]++;
    for (int p : top_positions(m.word)) m.top.push_back(vs[p]);
    for (int p : socle_positions(m.word)) m.socle.push_back(vs[p]);
    return m;
}

StringModule string_module(const GentleAlgebra& A, const std::string& text) {
    return string_module(A, parse_string(A, text));
}

StringModule simple(const GentleAlgebra& A, int vertex) {
    return string_module(A, trivial_word(vertex));
}

StringModule projective(const GentleAlgebra& A, int vertex) {
    const std::vector<int>& outs = A.arrows_out(vertex);
    if (outs.empty()) return simple(A, vertex);
    StringWord q = direct_path_from(A, outs[0]);
    if (outs.size() == 1) return string_module(A, q);
    StringWord p = direct_path_from(A, outs[1]);
    StringWord w = invert(A, p);
    w.letters.insert(w.letters.end(), q.letters.begin(), q.letters.end());
    return string_module(A, w);
}

StringModule injective(const GentleAlgebra& A, int vertex) {
    const std::vector<int>& ins = A.arrows_in(vertex);
    if (ins.empty()) return simple(A, vertex);
    StringWord p = direct_path_ending_at(A, ins[0]);
    if (ins.size() == 1) return string_module(A, p);
    StringWord qi = invert(A, direct_path_ending_at(A, ins[1]));
    StringWord w = p;
    w.letters.insert(w.letters.end(), qi.letters.begin(), qi.letters.end());
    return string_module(A, w);
}

StringModule r_module(const GentleAlgebra& A, int arrow) {
    return string_module(A, maximal_direct_path_after(A, arrow));
}

StringModule u_module(const GentleAlgebra& A, int arrow) {
    int g = A.direct_predecessor(arrow);
    if (g < 0) return simple(A, A.source(arrow));
    return string_module(A, direct_path_ending_at(A, g));
}

bool is_projective(const GentleAlgebra& A, const StringModule& m) {
    if (m.top.size() != 1) return false;
    return m == projective(A, m.top[0]);
}

bool is_injective(const GentleAlgebra& A, const StringModule& m) {
    if (m.socle.size() != 1) return false;
    return m == injective(A, m.socle[0]);
}

BandModule band_module(const GentleAlgebra& A, const Band& b) {
    BandModule m;
    m.band = b;
    m.dim_vector.assign(A.num_vertices(), 0);
    for (Letter l : b.letters) m.dim_vector[letter_source(A, l)]++;
    return m;
}

std::string module_name(const GentleAlgebra& A, const StringModule& m) {
    if (m.word.trivial()) return "S_" + A.vertex_name(m.word.base);
    if (is_projective(A, m)) return "P_" + A.vertex_name(m.top[0]);
    if (is_injective(A, m)) return "I_" + A.vertex_name(m.socle[0]);
    return "M(" + render_word(A, m.word) + ")";
}

}  // namespace gentle
