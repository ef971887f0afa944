#pragma once

#include "gentle/algebra.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gentle {

class string_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Letter {
    int arrow = -1;
    bool inverse = false;

    bool operator==(const Letter& o) const { return arrow == o.arrow && inverse == o.inverse; }
    bool operator!=(const Letter& o) const { return !(*this == o); }
};

inline Letter inv(Letter l) { return {l.arrow, !l.inverse}; }
int letter_source(const GentleAlgebra& A, Letter l);
int letter_target(const GentleAlgebra& A, Letter l);

/* A reduced walk. `base` is the source vertex of the walk and is the only
   data of a trivial (length 0) word. */
struct StringWord {
    std::vector<Letter> letters;
    int base = -1;

    bool trivial() const { return letters.empty(); }
    int length() const { return int(letters.size()); }

    bool operator==(const StringWord& o) const { return base == o.base && letters == o.letters; }
    bool operator!=(const StringWord& o) const { return !(*this == o); }
};

StringWord trivial_word(int vertex);
StringWord make_word(const GentleAlgebra& A, std::vector<Letter> letters);  /* validates */

int word_source(const StringWord& w);
int word_target(const GentleAlgebra& A, const StringWord& w);

/* true when (x, y) may appear consecutively in a string: endpoints match, no
   backtrack, and a direct-direct pair composes outside the ideal while an
   inverse-inverse pair (a^-1, b^-1) requires (b a) outside the ideal */
bool letters_compose(const GentleAlgebra& A, Letter x, Letter y);

/* ok or a message naming the offending letter pair */
std::optional<std::string> word_violation(const GentleAlgebra& A, const std::vector<Letter>& letters);

/* text syntax: whitespace-separated arrow names, "-name" for an inverse
   letter, "@vertex" for the trivial string */
StringWord parse_string(const GentleAlgebra& A, const std::string& text);
std::string render_word(const GentleAlgebra& A, const StringWord& w);

StringWord invert(const GentleAlgebra& A, const StringWord& w);

/* total order used for canonical forms: direct letters before inverse ones,
   then arrow index; words compared lexicographically */
bool word_less(const StringWord& a, const StringWord& b);
StringWord canonical_form(const GentleAlgebra& A, const StringWord& w);

/* alternating decomposition into 2k segments, even slots inverse and odd
   slots direct, with trivial end segments inserted as needed */
struct SegmentDecomposition {
    std::vector<StringWord> segments;
    int k() const { return int(segments.size()) / 2; }
};
SegmentDecomposition segments(const GentleAlgebra& A, const StringWord& w);

/* positions of the walk carrying the top (no letter acts into them) resp. the
   socle (no letter acts out of them) */
std::vector<int> top_positions(const StringWord& w);
std::vector<int> socle_positions(const StringWord& w);
std::vector<int> walk_vertices(const GentleAlgebra& A, const StringWord& w);

/* arrows d with d^-1 w (resp. w d) a valid string; for a trivial word both
   sets equal the arrows leaving the base vertex */
std::vector<int> left_extension_arrows(const GentleAlgebra& A, const StringWord& w);
std::vector<int> right_extension_arrows(const GentleAlgebra& A, const StringWord& w);

/* deterministic split of a trivial word's extension arrows over the two word
   ends: lexicographically smaller arrow to the left end */
std::pair<std::optional<int>, std::optional<int>> end_extension_arrows(const GentleAlgebra& A,
                                                                       const StringWord& w);

/* ends filtered to arrows on relation cycles */
std::pair<std::optional<int>, std::optional<int>> minimally_ends_in_cycle(const GentleAlgebra& A,
                                                                          const StringWord& w);

/* right-maximal direct string p with (a p) outside the ideal; trivial at
   t(a) when a has no direct successor */
StringWord maximal_direct_path_after(const GentleAlgebra& A, int arrow);

/* direct path starting with `arrow`, extended maximally to the right */
StringWord direct_path_from(const GentleAlgebra& A, int arrow);
/* direct path ending with `arrow`, extended maximally to the left */
StringWord direct_path_ending_at(const GentleAlgebra& A, int arrow);

/* cyclic string, both directions present, primitive; stored as the
   lexicographically smallest representative over rotations and inversion */
struct Band {
    std::vector<Letter> letters;

    bool operator==(const Band& o) const { return letters == o.letters; }
};

Band validate_band(const GentleAlgebra& A, const std::vector<Letter>& letters);
Band parse_band(const GentleAlgebra& A, const std::string& text);
std::string render_band(const GentleAlgebra& A, const Band& b);

/* word over the opposite algebra describing the dual module: same letter
   order, every direction flipped */
StringWord dual_word(const StringWord& w);
Band dual_band(const GentleAlgebra& A_op, const Band& b);

}  // namespace gentle
