#ifndef CUTVOR_TILING_HPP
#define CUTVOR_TILING_HPP

#include "voronoi.hpp"

#include <optional>

namespace cutvor {

// d^m_f, its integral subgraph G^m_f, and the tile center d*(d^m_f).
struct TileDescriptor {
    std::vector<Int> f;
    Cochain1 dm;                  // half-integer point in C^1
    std::vector<char> sub_edges;  // mask of G^m_f
    Cochain0 center;              // d*(dm)
    bool connected = false;

    std::string key() const {
        std::string s;
        for (int k = 0; k < dm.size(); ++k) {
            if (k) s += '|';
            s += rat_str(dm[k]);
        }
        return s;
    }
};

TileDescriptor tile_point(const Multigraph& g, const LengthFunction& ell,
                          const TwistC1& tw, const std::vector<Int>& f);

// theta on the cube around d(f): collapses coordinates outside G^m_f.
Cochain1 theta_project(const Multigraph& g, const LengthFunction& ell,
                       const TwistC1& tw, const std::vector<Int>& f,
                       const Cochain1& x);

struct FiberDescription {
    int k = 0;                       // number of components of G^m_f
    std::vector<int> comp_of;        // vertex -> component
    std::vector<std::vector<int>> comps;
    // I[i][j] for i<j; nullopt when no G-edge joins C_i and C_j (interval R)
    std::vector<std::vector<std::optional<std::pair<Int, Int>>>> intervals;
    bool finite = true;              // contracted graph connected
    // The fiber: h = f + eta lifted by components; eta(component of v0) = 0.
    std::vector<std::vector<Int>> etas;
};

FiberDescription fiber_over(const Multigraph& g, const LengthFunction& ell,
                            const TwistC1& tw, const std::vector<Int>& f);

// p in Vor^m_H(f)?  Max-flow feasibility on G^m_f with capacities 1/2,
// cleared to integers.  Requires sum p = 0 and G^m_f connected.
bool tile_contains(const Multigraph& g, const TileDescriptor& t, const Cochain0& p);

// Strict interior, by the strict cut inequalities on the same data.
bool tile_contains_strict(const Multigraph& g, const TileDescriptor& t,
                          const Cochain0& p);

struct NeighborInfo {
    std::vector<Int> h;  // f + n*chi_S
    Int n = 0;
    Cochain1 eta;        // eta^m_{S,f} = (eta_f + eta_h)/2
};

// The tile across the facet of the bond S of G^m_f.
NeighborInfo neighbor_across(const Multigraph& g, const LengthFunction& ell,
                             const TwistC1& tw, const std::vector<Int>& f,
                             const std::vector<char>& in_s);

struct SharedFace {
    std::vector<int> level_of;        // vertex -> level index of f2 - f1
    int q = 0;                        // number of levels
    std::vector<signed char> d1, d2;  // the two coherent orientations
    Cochain1 mu;                      // d^m_{f1} + chi_{D1}/2 = d^m_{f2} + chi_{D2}/2
    int codim = 0;                    // codimension of the shared face
};

std::optional<SharedFace> tiles_intersect(const Multigraph& g,
                                          const LengthFunction& ell,
                                          const TwistC1& tw,
                                          const std::vector<Int>& f1,
                                          const std::vector<Int>& f2);

struct TileNeighborRecord {
    std::vector<int> side;      // S
    Int n = 0;
    Cochain1 eta;
    int neighbor = -1;          // index of the neighbor's class in the tiling
    std::vector<Int> shift;     // lattice element: neighbor rep + d*(d_{N*shift})
};

struct Tiling {
    Int period = 1;
    std::vector<TileDescriptor> tiles;                       // sorted by dm
    std::vector<std::vector<TileNeighborRecord>> neighbors;  // per tile
};

// One representative per period class: f(v0)=0, values in [0, N).
Tiling enumerate_tiling(const Multigraph& g, const LengthFunction& ell,
                        const TwistC1& tw);

// Period lattice basis vector d*(d_{N chi_v}) in H_{0,R}.
Cochain0 period_basis_vector(const Multigraph& g, const LengthFunction& ell, int v);

struct LocatedTile {
    int tile = -1;
    std::vector<Int> shift;  // g with p in tile + d*(d_{N g})
    bool strict = false;
};

// All (tile, shift) pairs containing p, shifts ranging over the window
// [-w, w]^{V - v0}.  Requires sum p = 0.
std::vector<LocatedTile> locate_point(const Multigraph& g, const LengthFunction& ell,
                                      const TwistC1& tw, const Tiling& tiling,
                                      const Cochain0& p, Int window);

}  // namespace cutvor

#endif
