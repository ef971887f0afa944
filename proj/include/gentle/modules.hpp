#pragma once

#include "gentle/strings.hpp"

#include <vector>

namespace gentle {

/* Indecomposable string module M(w), identified with the canonical form of
   its word. top/socle hold vertex ids in walk order. */
struct StringModule {
    StringWord word;
    std::vector<int> dim_vector;  /* by vertex id */
    std::vector<int> top, socle;

    int total_dim() const { return word.length() + 1; }
    bool operator==(const StringModule& o) const { return word == o.word; }
    bool operator!=(const StringModule& o) const { return !(*this == o); }
};

StringModule string_module(const GentleAlgebra& A, const StringWord& w);
StringModule string_module(const GentleAlgebra& A, const std::string& text);

StringModule simple(const GentleAlgebra& A, int vertex);
StringModule projective(const GentleAlgebra& A, int vertex);
StringModule injective(const GentleAlgebra& A, int vertex);

/* R(a): the uniserial module generated by the arrow a */
StringModule r_module(const GentleAlgebra& A, int arrow);
/* U(a): the dual uniserial cogenerated by a */
StringModule u_module(const GentleAlgebra& A, int arrow);

bool is_projective(const GentleAlgebra& A, const StringModule& m);
bool is_injective(const GentleAlgebra& A, const StringModule& m);

/* Quasi-simple band module with unit parameter. */
struct BandModule {
    Band band;
    std::vector<int> dim_vector;

    bool operator==(const BandModule& o) const { return band == o.band; }
};

BandModule band_module(const GentleAlgebra& A, const Band& b);

std::string module_name(const GentleAlgebra& A, const StringModule& m);

}  // namespace gentle
