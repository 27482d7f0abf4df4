#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <functional>
#include <set>

using namespace cutvor;
using namespace cutvor::testsupport;

namespace {

// Oracle: the set of eta = h - f (normalized to 0 at vertex 0) with
// d^m_h = d^m_f, by exhaustive search in a box.
std::set<std::vector<Int>> fiber_brute(const Multigraph& g, const LengthFunction& ell,
                                       const TwistC1& tw, const std::vector<Int>& f,
                                       Int w) {
    std::set<std::vector<Int>> out;
    TileDescriptor t0 = tile_point(g, ell, tw, f);
    std::vector<Int> eta(g.vertex_count(), 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == g.vertex_count()) {
            std::vector<Int> h = f;
            for (int u = 0; u < g.vertex_count(); ++u) h[u] += eta[u];
            if (tile_point(g, ell, tw, h).dm == t0.dm) out.insert(eta);
            return;
        }
        for (Int val = -w; val <= w; ++val) {
            eta[v] = val;
            rec(v + 1);
        }
    };
    rec(1);  // eta(0) = 0
    return out;
}

// The same set as described by fiber_over (lifting component etas).
std::set<std::vector<Int>> fiber_from_description(const Multigraph& g,
                                                  const FiberDescription& fd) {
    std::set<std::vector<Int>> out;
    for (auto& eta_c : fd.etas) {
        std::vector<Int> eta(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) eta[v] = eta_c[fd.comp_of[v]];
        out.insert(eta);
    }
    return out;
}

}  // namespace

TEST_CASE("tile_point basics") {
    Multigraph g = k3();
    SUBCASE("unit lengths, zero twist: dm = d(f), full subgraph") {
        LengthFunction ell = LengthFunction::ones(3);
        TwistC1 tw = TwistC1::zero(3);
        std::vector<Int> f{0, 2, -1};
        TileDescriptor t = tile_point(g, ell, tw, f);
        Cochain0 fc(3);
        for (int v = 0; v < 3; ++v) fc[v] = f[v];
        CHECK(t.dm == coboundary(g, fc));
        CHECK(t.connected);
        for (int k = 0; k < 3; ++k) CHECK(t.sub_edges[k] == 1);
    }
    SUBCASE("single edge l=2") {
        Multigraph e(2, {{0, 1}});
        LengthFunction ell({2});
        TileDescriptor t = tile_point(e, ell, TwistC1::zero(1), {0, 1});
        CHECK(t.dm[0] == Rat(1, 2));
        CHECK(t.sub_edges[0] == 0);
        CHECK_FALSE(t.connected);

        TileDescriptor t2 = tile_point(e, ell, TwistC1({1}), {0, 0});
        CHECK(t2.dm[0] == Rat(1, 2));
        CHECK(t2.sub_edges[0] == 0);
    }
    SUBCASE("invariant under constants") {
        LengthFunction ell({2, 3, 4});
        TwistC1 tw({1, -2, 5});
        std::vector<Int> f{3, -1, 7}, fc{8, 4, 12};
        CHECK(tile_point(g, ell, tw, f).dm == tile_point(g, ell, tw, fc).dm);
    }
    SUBCASE("center is the adjoint of dm") {
        LengthFunction ell({1, 1, 2});
        std::vector<Int> f{0, 1, 0};
        TileDescriptor t = tile_point(g, ell, TwistC1::zero(3), f);
        CHECK(t.center == adjoint(g, t.dm));
        CHECK(t.center.sum() == 0);
    }
}

TEST_CASE("theta_project") {
    Multigraph g = k3();
    LengthFunction ell({1, 1, 2});
    TwistC1 tw = TwistC1::zero(3);
    std::vector<Int> f{0, 1, 0};
    TileDescriptor t = tile_point(g, ell, tw, f);

    Cochain0 fc(3);
    for (int v = 0; v < 3; ++v) fc[v] = f[v];
    Cochain1 df = coboundary(g, fc);
    CHECK(theta_project(g, ell, tw, f, df) == t.dm);

    // identity at unit lengths
    LengthFunction ones = LengthFunction::ones(3);
    Cochain1 x = df;
    x[0] += Rat(1, 3);
    x[2] -= Rat(1, 2);
    CHECK(theta_project(g, ones, tw, f, x) == x);

    // boundary collapse on a non-integral edge
    Multigraph e(2, {{0, 1}});
    Cochain1 xe(std::vector<Rat>{Rat(1, 2)});
    CHECK(theta_project(e, LengthFunction({2}), TwistC1::zero(1), {0, 1}, xe)[0] ==
          Rat(1, 2));

    Cochain1 outside(std::vector<Rat>{Rat(5, 2)});
    CHECK_THROWS_AS(theta_project(e, LengthFunction({2}), TwistC1::zero(1), {0, 1}, outside),
                    DomainError);
}

TEST_CASE("theta is well defined on cube intersections") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 40; ++it) {
        Multigraph g = random_connected_multigraph(rng, 2, 4, 6);
        std::vector<Int> ell(g.edge_count()), m(g.edge_count());
        for (auto& l : ell) l = 1 + (Int)(rng() % 3);
        for (auto& x : m) x = (Int)(rng() % 5) - 2;
        LengthFunction lf(ell);
        TwistC1 tw(m);
        auto f = random_fn(rng, g.vertex_count(), -2, 2);
        auto h = f;
        // h with ||d(f)-d(h)||_inf <= 1 so the cubes intersect: shift one
        // vertex by 1 when possible
        int v = 1 + (int)(rng() % (g.vertex_count() - 1));
        h[v] += 1;
        Cochain1 df(g.edge_count()), dh(g.edge_count());
        for (int k = 0; k < g.edge_count(); ++k) {
            df[k] = f[g.head(k)] - f[g.tail(k)];
            dh[k] = h[g.head(k)] - h[g.tail(k)];
        }
        bool overlap = true;
        for (int k = 0; k < g.edge_count(); ++k) {
            Rat d = df[k] - dh[k];
            if (d > 1 || d < -1) overlap = false;
        }
        if (!overlap) continue;
        // x in the intersection: per edge the midpoint of the feasible range
        Cochain1 x(g.edge_count());
        for (int k = 0; k < g.edge_count(); ++k)
            x[k] = (df[k] + dh[k]) / 2;  // |x - df| <= 1/2 and |x - dh| <= 1/2
        CHECK(theta_project(g, lf, tw, f, x) == theta_project(g, lf, tw, h, x));
    }
}

TEST_CASE("fiber_over: examples") {
    SUBCASE("connected subgraph: single point fiber") {
        Multigraph g = k3();
        LengthFunction ell = LengthFunction::ones(3);
        FiberDescription fd = fiber_over(g, ell, TwistC1::zero(3), {0, 5, -2});
        CHECK(fd.k == 1);
        CHECK(fd.finite);
        REQUIRE(fd.etas.size() == 1);
        CHECK(fd.etas[0] == std::vector<Int>{0});
    }
    SUBCASE("single edge l=3, f=(0,1): interval [0,1], two cubes") {
        Multigraph e(2, {{0, 1}});
        FiberDescription fd = fiber_over(e, LengthFunction({3}), TwistC1::zero(1), {0, 1});
        CHECK(fd.k == 2);
        REQUIRE(fd.intervals[0][1].has_value());
        CHECK(fd.intervals[0][1]->first == 0);
        CHECK(fd.intervals[0][1]->second == 1);
        CHECK(fd.etas.size() == 2);  // eta in {0, 1}
        auto brute = fiber_brute(e, LengthFunction({3}), TwistC1::zero(1), {0, 1}, 5);
        CHECK(fiber_from_description(e, fd) == brute);
    }
    SUBCASE("K3 with l=(2,2,2), f=(0,1,0) vs exhaustive oracle") {
        Multigraph g = k3();
        LengthFunction ell({2, 2, 2});
        FiberDescription fd = fiber_over(g, ell, TwistC1::zero(3), {0, 1, 0});
        auto brute = fiber_brute(g, ell, TwistC1::zero(3), {0, 1, 0}, 7);
        CHECK(fiber_from_description(g, fd) == brute);
    }
}

TEST_CASE("fiber_over matches exhaustive search on random instances") {
    std::mt19937_64 rng(42);
    int done = 0;
    while (done < 15) {
        Multigraph g = random_connected_multigraph(rng, 2, 4, 4);
        std::vector<Int> ell(g.edge_count()), m(g.edge_count());
        Int total = 0;
        for (auto& l : ell) {
            l = 1 + (Int)(rng() % 3);
            total += l;
        }
        if (total > 8) continue;
        for (auto& x : m) x = (Int)(rng() % 7) - 3;  // twisted fibers included
        auto f = random_fn(rng, g.vertex_count(), -3, 3);
        LengthFunction lf(ell);
        TwistC1 tw(m);
        FiberDescription fd = fiber_over(g, lf, tw, f);
        CHECK(fd.finite);
        auto brute = fiber_brute(g, lf, tw, f, total);
        CHECK(fiber_from_description(g, fd) == brute);
        ++done;
    }
}

TEST_CASE("tile_contains: center, outside points, strict interior") {
    Multigraph g = k3();
    LengthFunction ell({1, 1, 2});
    TwistC1 tw = TwistC1::zero(3);
    TileDescriptor t = tile_point(g, ell, tw, {0, 0, 0});
    REQUIRE(t.connected);

    CHECK(tile_contains(g, t, t.center));
    CHECK(tile_contains_strict(g, t, t.center));

    // far beyond the nearest facet
    Cochain0 far = t.center;
    far[0] += 3;
    far[1] -= 3;
    CHECK_FALSE(tile_contains(g, t, far));

    Cochain0 bad(3);
    bad[0] = 1;
    CHECK_THROWS_AS(tile_contains(g, t, bad), DomainError);

    TileDescriptor empty_sub = tile_point(Multigraph(2, {{0, 1}}), LengthFunction({2}),
                                          TwistC1::zero(1), {0, 1});
    Cochain0 origin(2);
    CHECK_THROWS_AS(tile_contains(Multigraph(2, {{0, 1}}), empty_sub, origin),
                    DomainError);
}

TEST_CASE("max-flow membership agrees with the cut-inequality route") {
    std::mt19937_64 rng(43);
    int done = 0;
    while (done < 120) {
        Multigraph g = random_connected_multigraph(rng, 2, 5, 7);
        std::vector<Int> ell(g.edge_count()), m(g.edge_count());
        for (auto& l : ell) l = 1 + (Int)(rng() % 3);
        for (auto& x : m) x = (Int)(rng() % 3) - 1;
        LengthFunction lf(ell);
        TwistC1 tw(m);
        auto f = random_fn(rng, g.vertex_count(), -2, 2);
        TileDescriptor t = tile_point(g, lf, tw, f);
        if (!t.connected) continue;
        // random rational point near the center
        Cochain0 p = t.center;
        Rat drift = 0;
        for (int v = 1; v < g.vertex_count(); ++v) {
            Rat dv((Int)(rng() % 41) - 20, 12);
            p[v] += dv;
            drift += dv;
        }
        p[0] -= drift;
        // independent route: eta with d* eta = p - center inside the
        // subgraph's cut space, then the 2^V cut inequalities
        std::vector<std::pair<int, int>> sub;
        std::vector<int> back;
        for (int k = 0; k < g.edge_count(); ++k)
            if (t.sub_edges[k]) {
                sub.push_back({g.tail(k), g.head(k)});
                back.push_back(k);
            }
        Multigraph gs(g.vertex_count(), sub);
        Cochain0 target = p - t.center;
        Cochain0 gamma = laplacian_solve(gs, target);
        Cochain1 eta = coboundary(gs, gamma);
        CHECK(tile_contains(g, t, p) == voronoi_membership(gs, eta));
        ++done;
    }
}

TEST_CASE("neighbor_across") {
    Multigraph g = k3();
    SUBCASE("unit lengths: n = 1 and eta is the bond cochain") {
        LengthFunction ell = LengthFunction::ones(3);
        TwistC1 tw = TwistC1::zero(3);
        std::vector<char> in_s{0, 1, 0};  // S = {1}
        NeighborInfo nb = neighbor_across(g, ell, tw, {0, 0, 0}, in_s);
        CHECK(nb.n == 1);
        CHECK(nb.h == std::vector<Int>{0, 1, 0});
        CHECK(nb.eta == cut_cochain(g, in_s));
    }
    SUBCASE("K3 l=(1,1,2), S={2}: the long edge leaves the subgraph") {
        LengthFunction ell({1, 1, 2});
        TwistC1 tw = TwistC1::zero(3);
        std::vector<char> in_s{0, 0, 1};  // S = {2}, incident to edges 1 and 2
        NeighborInfo nb = neighbor_across(g, ell, tw, {0, 0, 0}, in_s);
        CHECK(nb.n == 1);
        TileDescriptor tf = tile_point(g, ell, tw, {0, 0, 0});
        TileDescriptor th = tile_point(g, ell, tw, nb.h);
        CHECK(th.sub_edges[2] == 0);  // l=2 edge dropped
        CHECK(nb.eta[1] == 1);        // into S on the unit edge (both cuts)
        CHECK(nb.eta[2] == Rat(1, 2));  // half entry on the long edge
        // shared facet lemma
        CHECK(th.dm - tf.dm == nb.eta);
    }
    SUBCASE("lemma and n-minimality on random instances") {
        std::mt19937_64 rng(44);
        int done = 0;
        while (done < 60) {
            Multigraph h = random_connected_multigraph(rng, 2, 5, 7);
            std::vector<Int> ell(h.edge_count()), m(h.edge_count());
            for (auto& l : ell) l = 1 + (Int)(rng() % 4);
            for (auto& x : m) x = (Int)(rng() % 5) - 2;
            LengthFunction lf(ell);
            TwistC1 tw(m);
            auto f = random_fn(rng, h.vertex_count(), -3, 3);
            TileDescriptor t = tile_point(h, lf, tw, f);
            if (!t.connected) continue;
            unsigned long long mask = 1 + rng() % ((1ull << h.vertex_count()) - 2);
            std::vector<char> in_s(h.vertex_count(), 0), comp(h.vertex_count(), 0);
            for (int v = 0; v < h.vertex_count(); ++v) {
                in_s[v] = mask >> v & 1;
                comp[v] = !in_s[v];
            }
            if (!h.induced_connected(in_s, t.sub_edges) ||
                !h.induced_connected(comp, t.sub_edges))
                continue;
            NeighborInfo nb = neighbor_across(h, lf, tw, f, in_s);
            TileDescriptor th = tile_point(h, lf, tw, nb.h);
            CHECK(th.connected);
            CHECK(th.dm - t.dm == nb.eta);  // d^m_h - d^m_f = eta^m_{S,f}
            // minimality: every smaller n leaves the subgraph disconnected
            for (Int n = 1; n < nb.n; ++n) {
                std::vector<Int> hn = f;
                for (int v = 0; v < h.vertex_count(); ++v)
                    if (in_s[v]) hn[v] += n;
                CHECK_FALSE(tile_point(h, lf, tw, hn).connected);
            }
            // facet subgraph pieces agree on both sides
            for (int k = 0; k < h.edge_count(); ++k) {
                if (in_s[h.tail(k)] != in_s[h.head(k)]) continue;
                CHECK(t.sub_edges[k] == th.sub_edges[k]);
            }
            ++done;
        }
    }
    SUBCASE("bond condition violations are rejected") {
        LengthFunction ell = LengthFunction::ones(3);
        TwistC1 tw = TwistC1::zero(3);
        Multigraph path = p3();
        // S = {0, 2} is disconnected in the path
        std::vector<char> in_s{1, 0, 1};
        CHECK_THROWS_AS(
            neighbor_across(path, LengthFunction::ones(2), TwistC1::zero(2), {0, 0, 0}, in_s),
            DomainError);
    }
}

TEST_CASE("tiles_intersect") {
    Multigraph g = k3();
    LengthFunction ell({1, 1, 2});
    TwistC1 tw = TwistC1::zero(3);

    SUBCASE("constant difference: full coincidence") {
        auto sf = tiles_intersect(g, ell, tw, {0, 0, 0}, {4, 4, 4});
        REQUIRE(sf.has_value());
        CHECK(sf->q == 1);
        CHECK(sf->codim == 0);
    }
    SUBCASE("facet neighbors share a codim-1 face") {
        std::vector<char> in_s{0, 0, 1};
        NeighborInfo nb = neighbor_across(g, ell, tw, {0, 0, 0}, in_s);
        auto sf = tiles_intersect(g, ell, tw, {0, 0, 0}, nb.h);
        REQUIRE(sf.has_value());
        CHECK(sf->codim == 1);
        CHECK(sf->q == 2);
    }
    SUBCASE("distant tiles do not intersect") {
        auto sf = tiles_intersect(g, ell, tw, {0, 0, 0}, {0, 8, 16});
        CHECK_FALSE(sf.has_value());
    }
    SUBCASE("shared-face point lies in both tiles, all nearby pairs") {
        for (auto& cfg : std::vector<std::pair<std::vector<Int>, std::vector<Int>>>{
                 {{1, 1, 2}, {0, 0, 0}}, {{2, 2, 2}, {1, 0, 0}}}) {
            LengthFunction lf(cfg.first);
            TwistC1 twc(cfg.second);
            Tiling tiling = enumerate_tiling(g, lf, twc);
            int found = 0;
            for (auto& t1 : tiling.tiles)
                for (auto& t2 : tiling.tiles) {
                    auto sf = tiles_intersect(g, lf, twc, t1.f, t2.f);
                    if (!sf) continue;
                    // mu with zero cube coordinates is a point of the face
                    Cochain0 p = adjoint(g, sf->mu);
                    CHECK(tile_contains(g, t1, p));
                    CHECK(tile_contains(g, t2, p));
                    ++found;
                }
            CHECK(found > 0);
        }
    }
}

TEST_CASE("enumerate_tiling") {
    Multigraph g = k3();
    SUBCASE("unit lengths: one class, 6 bond neighbors (Cayley graph)") {
        Tiling t = enumerate_tiling(g, LengthFunction::ones(3), TwistC1::zero(3));
        CHECK(t.period == 1);
        REQUIRE(t.tiles.size() == 1);
        CHECK(t.neighbors[0].size() == 6);
        for (auto& r : t.neighbors[0]) CHECK(r.neighbor == 0);
    }
    SUBCASE("K3, l=(1,1,2): hexagon and quadrilateral classes") {
        Tiling t = enumerate_tiling(g, LengthFunction({1, 1, 2}), TwistC1::zero(3));
        CHECK(t.period == 2);
        int hexes = 0, quads = 0;
        for (auto& tile : t.tiles) {
            int edges = 0;
            for (auto e : tile.sub_edges) edges += e;
            if (edges == 3)
                ++hexes;
            else if (edges == 2)
                ++quads;
        }
        CHECK(hexes == 2);
        CHECK(quads == 2);
        CHECK(t.tiles.size() == 4);
    }
    SUBCASE("twisted (2,2,2) with m=(1,0,0): no full-subgraph tile") {
        Tiling t = enumerate_tiling(g, LengthFunction({2, 2, 2}), TwistC1({1, 0, 0}));
        CHECK(t.tiles.size() == 3);
        for (auto& tile : t.tiles) {
            int edges = 0;
            for (auto e : tile.sub_edges) edges += e;
            CHECK(edges == 2);
        }
    }
    SUBCASE("CRT lengths (2,3,5): every connected spanning subgraph occurs") {
        Tiling t = enumerate_tiling(g, LengthFunction({2, 3, 5}), TwistC1::zero(3));
        std::set<std::vector<char>> subs;
        for (auto& tile : t.tiles) subs.insert(tile.sub_edges);
        CHECK(subs.count({1, 1, 1}));
        CHECK(subs.count({1, 1, 0}));
        CHECK(subs.count({1, 0, 1}));
        CHECK(subs.count({0, 1, 1}));
        CHECK(subs.size() == 4);
    }
}

TEST_CASE("unit-length projection: cube membership matches cell membership") {
    // At l = 1, m = 0 the tiling is the standard Voronoi tiling of the
    // Laplacian lattice and d* maps each cube onto one cell: for x in the
    // cube arrangement, d*(x) lands in Vor(d* d(f')) exactly when x lies in
    // the cube of d(f').
    std::mt19937_64 rng(46);
    for (int it = 0; it < 20; ++it) {
        Multigraph g = random_connected_multigraph(rng, 2, 4, 6);
        LengthFunction ell = LengthFunction::ones(g.edge_count());
        TwistC1 tw = TwistC1::zero(g.edge_count());
        auto f0 = random_fn(rng, g.vertex_count(), -1, 1);
        Cochain1 x(g.edge_count());
        for (int k = 0; k < g.edge_count(); ++k) {
            Rat eps((Int)(rng() % 13) - 6, 13);  // |eps| < 1/2
            x[k] = Rat(f0[g.head(k)] - f0[g.tail(k)]) + eps;
        }
        Cochain0 px = adjoint(g, x);
        std::vector<Int> fp(g.vertex_count(), 0);
        std::function<void(int)> rec = [&](int v) {
            if (v == g.vertex_count()) {
                TileDescriptor t = tile_point(g, ell, tw, fp);
                bool in_cube = true;
                for (int k = 0; k < g.edge_count(); ++k) {
                    Rat d = x[k] - t.dm[k];
                    if (d > Rat(1, 2) || d < Rat(-1, 2)) in_cube = false;
                }
                CHECK(tile_contains(g, t, px) == in_cube);
                return;
            }
            for (Int val = f0[v] - 1; val <= f0[v] + 1; ++val) {
                fp[v] = val;
                rec(v + 1);
            }
        };
        rec(1);
    }
}

TEST_CASE("shared facet midpoint belongs to both tiles") {
    Multigraph g = k3();
    LengthFunction ell({2, 3, 5});
    TwistC1 tw = TwistC1::zero(3);
    std::mt19937_64 rng(47);
    Tiling tiling = enumerate_tiling(g, ell, tw);
    int done = 0;
    for (auto& t : tiling.tiles) {
        if (done >= 10) break;
        for (unsigned mask = 1; mask + 1 < 8u && done < 10; ++mask) {
            std::vector<char> in_s(3, 0), comp(3, 0);
            for (int v = 0; v < 3; ++v) {
                in_s[v] = mask >> v & 1;
                comp[v] = !in_s[v];
            }
            if (!g.induced_connected(in_s, t.sub_edges) ||
                !g.induced_connected(comp, t.sub_edges))
                continue;
            NeighborInfo nb = neighbor_across(g, ell, tw, t.f, in_s);
            TileDescriptor th = tile_point(g, ell, tw, nb.h);
            // the facet description's base point d*(d^m_f + eta_f/2), where
            // eta_f is the bond of G^m_f across S extended by zero
            Cochain1 mid = t.dm;
            for (int k = 0; k < 3; ++k) {
                if (!t.sub_edges[k] || in_s[g.tail(k)] == in_s[g.head(k)]) continue;
                mid[k] += in_s[g.head(k)] ? Rat(1, 2) : Rat(-1, 2);
            }
            Cochain0 p = adjoint(g, mid);
            CHECK(tile_contains(g, t, p));
            CHECK(tile_contains(g, th, p));
            CHECK_FALSE(tile_contains_strict(g, t, p));
            ++done;
        }
    }
    CHECK(done == 10);
}

TEST_CASE("locate_point covers sampled points with one strict hit") {
    Multigraph g = k3();
    LengthFunction ell({1, 1, 2});
    TwistC1 tw = TwistC1::zero(3);
    Tiling tiling = enumerate_tiling(g, ell, tw);
    std::mt19937_64 rng(45);
    for (int it = 0; it < 25; ++it) {
        Cochain0 p(3);
        for (int v = 1; v < 3; ++v) {
            Rat tv((Int)(rng() % 64), 64);
            Cochain0 b = period_basis_vector(g, ell, v);
            for (int w = 0; w < 3; ++w) p[w] += tv * b[w];
        }
        auto hits = locate_point(g, ell, tw, tiling, p, 1);
        CHECK(!hits.empty());
        int strict = 0;
        for (auto& h : hits) strict += h.strict;
        CHECK(strict <= 1);
    }
}
