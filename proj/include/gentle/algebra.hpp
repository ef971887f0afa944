#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gentle {

/* Raw input: named vertices, named arrows with endpoints, and length-two
   relations given as ordered arrow-name pairs (first composed with second). */
struct Presentation {
    std::vector<std::string> vertices;
    struct RawArrow {
        std::string name, source, target;
    };
    std::vector<RawArrow> arrows;
    std::vector<std::pair<std::string, std::string>> relations;
};

class validation_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/* A validated gentle presentation.

   Vertices and arrows are indexed by the lexicographic order of their names;
   every derived table below is keyed by those indices. The four successor /
   predecessor tables encode, for each arrow a, the unique arrow b with ab
   outside the ideal (direct) resp. inside it (relation), when it exists. */
class GentleAlgebra {
  public:
    struct Arrow {
        std::string name;
        int source = -1, target = -1;
    };

    int num_vertices() const { return int(vertex_names_.size()); }
    int num_arrows() const { return int(arrows_.size()); }

    const std::string& vertex_name(int v) const { return vertex_names_[v]; }
    const Arrow& arrow(int a) const { return arrows_[a]; }
    const std::string& arrow_name(int a) const { return arrows_[a].name; }
    int source(int a) const { return arrows_[a].source; }
    int target(int a) const { return arrows_[a].target; }

    std::optional<int> vertex_id(const std::string& name) const;
    std::optional<int> arrow_id(const std::string& name) const;

    const std::vector<std::pair<int, int>>& relations() const { return relations_; }
    bool in_ideal(int first, int second) const;

    /* -1 when absent */
    int direct_successor(int a) const { return direct_succ_[a]; }
    int relation_successor(int a) const { return rel_succ_[a]; }
    int direct_predecessor(int a) const { return direct_pred_[a]; }
    int relation_predecessor(int a) const { return rel_pred_[a]; }

    const std::vector<int>& arrows_out(int v) const { return out_[v]; }
    const std::vector<int>& arrows_in(int v) const { return in_[v]; }

    /* cycles of the relation-successor map; the union of their arrows is the
       set of arrows lying on cycles with full relations */
    const std::vector<std::vector<int>>& relation_cycles() const { return relation_cycles_; }
    bool on_relation_cycle(int a) const { return cycle_of_[a] >= 0; }
    int cycle_index(int a) const { return cycle_of_[a]; }
    int cycle_length_of(int a) const;

    Presentation to_presentation() const;

    friend GentleAlgebra validate_gentle(const Presentation& p);

  private:
    std::vector<std::string> vertex_names_;
    std::vector<Arrow> arrows_;
    std::vector<std::pair<int, int>> relations_;
    std::vector<int> direct_succ_, rel_succ_, direct_pred_, rel_pred_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<std::vector<int>> relation_cycles_;
    std::vector<int> cycle_of_;
};

/* Checks all gentleness conditions plus finite-dimensionality (no composable
   cycle avoiding the ideal) and builds the derived tables. Throws
   validation_error naming the offending vertex or arrow. */
GentleAlgebra validate_gentle(const Presentation& p);

/* Arrows reversed, relations (a,b) -> (b,a). Arrow and vertex indices are
   preserved because names are unchanged. */
GentleAlgebra opposite(const GentleAlgebra& a);

/* Deterministic random gentle presentation: sample a quiver of valence <= 2,
   assign each composable pair at a vertex to exactly one of composable /
   relation subject to the uniqueness conditions, and reject draws with a
   relation-free composable cycle. Throws after a fixed retry budget. */
GentleAlgebra random_gentle(uint64_t seed, int max_vertices, int max_arrows);

}  // namespace gentle
