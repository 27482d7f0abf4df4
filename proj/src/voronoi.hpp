#ifndef CUTVOR_VORONOI_HPP
#define CUTVOR_VORONOI_HPP

#include "lattice.hpp"

#include <map>
#include <optional>
#include <string>

namespace cutvor {

// Ordered partition V_1,...,V_s (s >= 2) with crossing edges only between
// consecutive parts.  Checked at construction.
class GeneralizedCut {
public:
    GeneralizedCut(const Multigraph& g, std::vector<std::vector<int>> parts);

    int part_count() const { return (int)parts_.size(); }
    const std::vector<std::vector<int>>& parts() const { return parts_; }
    int part_of(int v) const { return part_of_[v]; }

    // chi_C: value i+1 on V_{i+1} as a vertex function (1-based values).
    Cochain0 characteristic(const Multigraph& g) const;

private:
    std::vector<std::vector<int>> parts_;
    std::vector<int> part_of_;
};

// Coherent acyclic orientation of a cut subgraph: arrows stored per edge,
// 0 = edge absent, +1 = canonical direction, -1 = reversed.  Equality is
// equality of arrow sets.
struct Cao {
    std::vector<signed char> arrow;
    std::vector<std::vector<int>> witness;  // one inducing ordered partition

    int oriented_count() const {
        int c = 0;
        for (auto a : arrow) c += a != 0;
        return c;
    }
    bool orients_all() const {
        for (auto a : arrow)
            if (a == 0) return false;
        return true;
    }
    // D1 <= D2  iff  E(D2) subset of E(D1)
    static bool arrows_subset(const Cao& inner, const Cao& outer) {
        for (size_t k = 0; k < inner.arrow.size(); ++k)
            if (inner.arrow[k] != 0 && inner.arrow[k] != outer.arrow[k]) return false;
        return true;
    }
    std::string key() const {
        std::string s(arrow.size(), '.');
        for (size_t k = 0; k < arrow.size(); ++k)
            if (arrow[k]) s[k] = arrow[k] > 0 ? '+' : '-';
        return s;
    }
};

struct Face {
    Cao cao;
    std::vector<int> vertex_ids;        // sorted ids into FacePoset::points
    std::vector<Cochain1> bonds_through;  // U_D
    int codim = 0;
};

struct FacePoset {
    std::vector<Face> faces;            // sorted by cao key
    std::vector<Cochain1> points;       // distinct cell vertices nu^D
    // Theorem A diagnostics: the map face -> cao must be an order
    // isomorphism and phi computed from the geometry must invert it.
    bool vertex_sets_distinct = true;
    bool order_isomorphic = true;
    bool phi_inverts = true;
    bool isomorphic() const {
        return vertex_sets_distinct && order_isomorphic && phi_inverts;
    }
    std::vector<int> f_vector;  // count per codim, ascending
};

// beta + eta in Vor_F(beta)?  Tests the 2^|V|-2 cut inequalities exactly.
// Requires eta in F_R.
bool voronoi_membership(const Multigraph& g, const Cochain1& eta);
// Strict version: eta in the interior of Vor_F(O).
bool voronoi_membership_strict(const Multigraph& g, const Cochain1& eta);

std::optional<GeneralizedCut> is_generalized_cut_element(const Multigraph& g,
                                                         const Cochain1& beta);

bool cells_intersect(const Multigraph& g, const Cochain1& beta, const Cochain1& lambda);

int cut_rank(const Multigraph& g, const GeneralizedCut& c);

struct Bond {
    std::vector<int> side;  // the subset C
    Cochain1 beta;          // d(chi_C)
};
// All bond elements of F_Z; closed under negation (C vs V-C).
std::vector<Bond> enumerate_bonds(const Multigraph& g);

// Decompose d(chi_S) as a sum of bonds with supp+ inside supp+(d(chi_S)),
// by the component-splitting recursion.
std::vector<Cochain1> sum_of_bonds(const Multigraph& g, const std::vector<char>& in_s);

// All coherent acyclic orientations of cut subgraphs, deduplicated by arrow
// set and sorted by key; includes the empty orientation.
std::vector<Cao> enumerate_cac(const Multigraph& g);

// The vertex nu^D of Vor_F(O) for a total acyclic orientation D.
Cochain1 face_vertex(const Multigraph& g, const Cao& d);

FacePoset face_poset(const Multigraph& g);

}  // namespace cutvor

#endif
