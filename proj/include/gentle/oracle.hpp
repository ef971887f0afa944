#pragma once

#include "gentle/homology.hpp"
#include "gentle/intmat.hpp"

#include <string>
#include <vector>

namespace gentle {

/* Quiver representation with exact integer matrices. The matrix of an arrow a
   has shape dims[target(a)] x dims[source(a)] and acts on column vectors. */
struct Representation {
    std::vector<int> dims;
    std::vector<IMat> maps;

    int total_dim() const;
};

Representation to_representation(const GentleAlgebra& A, const StringModule& m);
Representation to_representation(const GentleAlgebra& A, const BandModule& m);

/* every relation must annihilate; used as a sanity check in tests */
bool relations_hold(const GentleAlgebra& A, const Representation& x);

Representation dual_representation(const GentleAlgebra& A, const Representation& x);

/* dimension of the space of intertwiners X -> Y */
int hom_dim(const GentleAlgebra& A, const Representation& x, const Representation& y);

/* Projective cover built from the top of X: one summand P_v per top basis
   vector, with the map lifted through paths out of the generator. blocks[v]
   has shape dims(X)[v] x (sum of the summand dimensions at v). */
struct CoverMap {
    std::vector<int> summands;       /* vertices, one per indecomposable summand */
    Representation source;           /* the direct sum of those projectives */
    std::vector<IMat> blocks;        /* per-vertex matrices of the cover map */
};

std::pair<CoverMap, Representation> cover_and_kernel(const GentleAlgebra& A,
                                                     const Representation& x);

/* Ext^n(M, N) for 1 <= n <= max_degree by building a minimal projective
   resolution of M and taking cohomology of Hom(P*, N) with exact ranks. */
std::vector<int> ext_dims_oracle(const GentleAlgebra& A, const Representation& m,
                                 const Representation& n, int max_degree);
int ext_dim_oracle(const GentleAlgebra& A, const Representation& m, const Representation& n,
                   int degree);

/* syzygy dimension vectors (kernels of successive covers) up to max_degree */
std::vector<std::vector<int>> syzygy_dims_oracle(const GentleAlgebra& A, const Representation& x,
                                                 int max_degree);

struct PairCheck {
    bool ok = true;
    std::string detail;                 /* first mismatch, empty when ok */
    std::vector<int> comb_dims, oracle_dims;
};

/* combinatorial ext pipeline and syzygy dimensions against the oracle */
PairCheck check_pair(const GentleAlgebra& A, const StringModule& m, const StringModule& n,
                     int horizon);

}  // namespace gentle
