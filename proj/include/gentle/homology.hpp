#pragma once

#include "gentle/modules.hpp"

#include <optional>

namespace gentle {

/* First syzygy of a string module: up to two uniserial end summands R(arrow)
   plus projectives at the interior valleys. The dual decomposition (cosyzygy)
   reuses the same shape with U(arrow) ends and injective middles. */
struct SyzygyEnd {
    int arrow;
    StringModule module;
};

struct SyzygyDecomposition {
    std::optional<SyzygyEnd> left, right;
    std::vector<StringModule> middle;

    int total_dim() const;
    std::vector<StringModule> summands() const;
    bool zero() const { return !left && !right && middle.empty(); }
};

std::vector<StringModule> projective_cover(const GentleAlgebra& A, const StringModule& m);

SyzygyDecomposition syzygy(const GentleAlgebra& A, const StringModule& m);
SyzygyDecomposition cosyzygy(const GentleAlgebra& A, const StringModule& m);

/* Chain a, rel_succ(a), ... : ends at an arrow with no relation successor
   (projective_reached) or closes into the relation cycle through a. The

   relation-successor map is a partial injection, so a cycle is entered only
   at its start. */
struct OmegaOrbit {
    std::vector<int> chain;
    bool cyclic = false;
    int entry_index = -1;
    int cycle_length = 0;

    /* arrow at orbit position j (0-based), or nullopt when the chain has
       terminated before j */
    std::optional<int> at(int j) const;
};

OmegaOrbit omega_orbit(const GentleAlgebra& A, int arrow, int horizon = 1 << 20);

struct ResolutionDegree {
    std::vector<int> proj_vertices;          /* cover of the current syzygy */
    SyzygyDecomposition syz;                 /* the next syzygy */
};

struct Resolution {
    std::vector<ResolutionDegree> degrees;
    std::optional<std::pair<int, int>> tail;  /* (start degree, period) */
    bool finite = false;                      /* resolution terminates */
};

Resolution resolution(const GentleAlgebra& A, const StringModule& m, int depth);

/* nullopt encodes infinite dimension */
std::optional<int> proj_dim(const GentleAlgebra& A, const StringModule& m);
std::optional<int> inj_dim(const GentleAlgebra& A, const StringModule& m);

SyzygyDecomposition band_syzygy(const GentleAlgebra& A, const BandModule& b);
SyzygyDecomposition band_cosyzygy(const GentleAlgebra& A, const BandModule& b);

/* nullopt = infinite global dimension */
std::optional<int> gl_dim_status(const GentleAlgebra& A);

}  // namespace gentle
