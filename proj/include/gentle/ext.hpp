#pragma once

#include "gentle/homology.hpp"

#include <optional>
#include <vector>

namespace gentle {

/* One basis element of Ext^1(M(v), M(w)): either an arrow extension with
   indecomposable middle M(w' b^-1 v'), or an overlap extension whose middle
   is the direct sum of two string modules built from a common factor m. */
struct ExtBasisElement {
    enum class Kind { arrow, overlap };
    Kind kind = Kind::arrow;
    int arrow = -1;                   /* connecting arrow (arrow kind) */
    StringWord overlap_m;             /* common factor (overlap kind) */
    std::vector<StringWord> middles;  /* canonical middle words: 1 or 2 */
};

/* Enumeration closes over inversion of v and w; results are deduplicated by
   canonical middle word (arrow kind) resp. by alignment equivalence under
   simultaneous inversion (overlap kind). */
std::vector<ExtBasisElement> arrow_extensions(const GentleAlgebra& A, const StringWord& v,
                                              const StringWord& w);
std::vector<ExtBasisElement> overlap_extensions(const GentleAlgebra& A, const StringWord& v,
                                                const StringWord& w);

int ext1_dim(const GentleAlgebra& A, const StringModule& m, const StringModule& n,
             std::vector<ExtBasisElement>* basis = nullptr);

/* dim Ext^1(R(alpha), M(w)) together with the connecting arrow and the middle
   words. The arrow is forced to be the relation successor of alpha; each
   orientation of w that glues contributes one dimension, so the result lies
   in {0, 1, 2}. */
struct Ext1FromR {
    int dim = 0;
    int beta = -1;
    std::vector<StringWord> middles;
};
Ext1FromR ext1_from_R(const GentleAlgebra& A, int alpha, const StringWord& w);

/* degree-n extension dimension: full enumeration at n = 1, syzygy-orbit
   recursion for n >= 2 */
int ext_dim(const GentleAlgebra& A, const StringModule& m, const StringModule& n, int degree);
std::vector<int> ext_dims(const GentleAlgebra& A, const StringModule& m, const StringModule& n,
                          int max_degree);

/* canonical middle words of the contributing arrow extensions at degree n>=2,
   left end first */
std::vector<StringWord> ext_basis_strings(const GentleAlgebra& A, const StringModule& m,
                                          const StringModule& n, int degree);

/* Dimensions of Ext^i(M,N) as a finite prefix plus an eventually repeating
   block. period 0 means the sequence is eventually zero; otherwise the block
   starts at degree prefix.size()+1 and has length = period = lcm of the
   lengths of the relation cycles met by the surviving end orbits. */
struct ExtSequence {
    std::vector<int> prefix;
    int period = 0;
    std::vector<int> block;

    bool periodic() const { return period > 0; }
    int stabilization_degree() const { return int(prefix.size()) + 1; }
    int dim_at(int degree) const;  /* degree >= 1 */
};

ExtSequence ext_sequence(const GentleAlgebra& A, const StringModule& m, const StringModule& n);

}  // namespace gentle
