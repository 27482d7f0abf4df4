#include "tiling.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace cutvor {

namespace {

// Edmonds-Karp with exact integer capacities.
class MaxFlow {
public:
    explicit MaxFlow(int n) : adj_(n) {}

    void add_arc(int u, int v, BigInt cap) {
        adj_[u].push_back({v, std::move(cap), (int)adj_[v].size()});
        adj_[v].push_back({u, 0, (int)adj_[u].size() - 1});
    }

    BigInt run(int s, int t) {
        BigInt flow = 0;
        for (;;) {
            std::vector<std::pair<int, int>> pred(adj_.size(), {-1, -1});
            std::deque<int> q{s};
            pred[s] = {s, 0};
            while (!q.empty() && pred[t].first < 0) {
                int v = q.front();
                q.pop_front();
                for (int i = 0; i < (int)adj_[v].size(); ++i) {
                    auto& a = adj_[v][i];
                    if (a.cap > 0 && pred[a.to].first < 0) {
                        pred[a.to] = {v, i};
                        q.push_back(a.to);
                    }
                }
            }
            if (pred[t].first < 0) return flow;
            BigInt aug = -1;
            for (int v = t; v != s;) {
                auto [u, i] = pred[v];
                if (aug < 0 || adj_[u][i].cap < aug) aug = adj_[u][i].cap;
                v = u;
            }
            for (int v = t; v != s;) {
                auto [u, i] = pred[v];
                adj_[u][i].cap -= aug;
                adj_[v][adj_[u][i].rev].cap += aug;
                v = u;
            }
            flow += aug;
        }
    }

private:
    struct Arc {
        int to;
        BigInt cap;
        int rev;
    };
    std::vector<std::vector<Arc>> adj_;
};

Int arrow_value(const std::vector<Int>& f, const TwistC1& tw, const Multigraph& g,
                int k, bool forward) {
    int u = forward ? g.tail(k) : g.head(k);
    int v = forward ? g.head(k) : g.tail(k);
    return f[v] - f[u] + tw.on(k, forward);
}

}  // namespace

TileDescriptor tile_point(const Multigraph& g, const LengthFunction& ell,
                          const TwistC1& tw, const std::vector<Int>& f) {
    if ((int)f.size() != g.vertex_count())
        throw DomainError("function length does not match V(G)");
    TileDescriptor t;
    t.f = f;
    t.dm = Cochain1(g.edge_count());
    t.sub_edges.assign(g.edge_count(), 0);
    for (int k = 0; k < g.edge_count(); ++k) {
        Int w = arrow_value(f, tw, g, k, true);
        Int l = ell[k];
        Int q = floor_div(w, l), r = w - q * l;
        if (r == 0) {
            t.dm[k] = Rat(q);
            t.sub_edges[k] = 1;
        } else {
            t.dm[k] = Rat(2 * q + 1, 2);
        }
    }
    t.center = adjoint(g, t.dm);
    t.connected = g.component_count(t.sub_edges) == 1;
    return t;
}

Cochain1 theta_project(const Multigraph& g, const LengthFunction& ell,
                       const TwistC1& tw, const std::vector<Int>& f,
                       const Cochain1& x) {
    TileDescriptor t = tile_point(g, ell, tw, f);
    Cochain1 out = t.dm;
    Rat half(1, 2);
    for (int k = 0; k < g.edge_count(); ++k) {
        Rat eps = x[k] - Rat(f[g.head(k)] - f[g.tail(k)]);
        if (eps > half || eps < -half)
            throw DomainError("theta_project requires x in the cube of d(f)");
        if (t.sub_edges[k]) out[k] += eps;
    }
    return out;
}

FiberDescription fiber_over(const Multigraph& g, const LengthFunction& ell,
                            const TwistC1& tw, const std::vector<Int>& f) {
    TileDescriptor t = tile_point(g, ell, tw, f);
    FiberDescription fd;
    auto comp = g.components(t.sub_edges);
    fd.comp_of = comp;
    fd.k = *std::max_element(comp.begin(), comp.end()) + 1;
    fd.comps.assign(fd.k, {});
    for (int v = 0; v < g.vertex_count(); ++v) fd.comps[comp[v]].push_back(v);
    fd.intervals.assign(fd.k, std::vector<std::optional<std::pair<Int, Int>>>(fd.k));
    bool any = false;
    for (int k = 0; k < g.edge_count(); ++k) {
        int a = comp[g.tail(k)], b = comp[g.head(k)];
        if (a == b) continue;
        any = true;
        // interval for the ordered pair (a, b): arrow along canonical k
        Int w = arrow_value(f, tw, g, k, true);
        Int r = mod_floor(w, ell[k]);  // in (0, l) on crossing edges
        Int lo = 1 - r, hi = ell[k] - r - 1;
        auto& cur = fd.intervals[a][b];
        if (!cur)
            cur = {lo, hi};
        else
            cur = {std::max(cur->first, lo), std::min(cur->second, hi)};
        auto& rev = fd.intervals[b][a];
        if (!rev)
            rev = {-hi, -lo};
        else
            rev = {std::max(rev->first, -hi), std::min(rev->second, -lo)};
    }
    (void)any;

    // Component graph connectivity decides finiteness (always connected for
    // connected G; kept general).
    std::vector<char> kseen(fd.k, 0);
    std::vector<int> stack;
    int root = comp[0];
    kseen[root] = 1;
    stack.push_back(root);
    int reached = 1;
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        for (int b = 0; b < fd.k; ++b)
            if (fd.intervals[a][b] && !kseen[b]) {
                kseen[b] = 1;
                ++reached;
                stack.push_back(b);
            }
    }
    fd.finite = reached == fd.k;

    // Enumerate eta: eta(root) = 0, bounds propagated along a BFS tree of
    // the component graph, every pair constraint checked at the end.  When
    // the component graph is disconnected, only the root's factor is
    // enumerated (the fiber is infinite).
    std::vector<int> nodes;
    {
        std::vector<char> seen(fd.k, 0);
        seen[root] = 1;
        std::deque<int> q{root};
        while (!q.empty()) {
            int a = q.front();
            q.pop_front();
            nodes.push_back(a);
            for (int b = 0; b < fd.k; ++b)
                if (fd.intervals[a][b] && !seen[b]) {
                    seen[b] = 1;
                    q.push_back(b);
                }
        }
    }
    std::vector<Int> eta(fd.k, 0);
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == nodes.size()) {
            for (int a : nodes)
                for (int b : nodes) {
                    if (a == b || !fd.intervals[a][b]) continue;
                    Int d = eta[b] - eta[a];
                    if (d < fd.intervals[a][b]->first || d > fd.intervals[a][b]->second)
                        return;
                }
            fd.etas.push_back(eta);
            return;
        }
        int b = nodes[idx];
        // bound eta(b) via any already-placed neighbor
        Int lo = 0, hi = -1;
        bool bound = false;
        for (size_t j = 0; j < idx; ++j) {
            int a = nodes[j];
            if (!fd.intervals[a][b]) continue;
            Int l = eta[a] + fd.intervals[a][b]->first;
            Int h = eta[a] + fd.intervals[a][b]->second;
            if (!bound) {
                lo = l;
                hi = h;
                bound = true;
            } else {
                lo = std::max(lo, l);
                hi = std::min(hi, h);
            }
        }
        if (!bound) throw DomainError("fiber enumeration hit a detached component");
        for (Int val = lo; val <= hi; ++val) {
            eta[b] = val;
            rec(idx + 1);
        }
        eta[b] = 0;
    };
    if (nodes.size() == 1)
        fd.etas.push_back(eta);
    else
        rec(1);
    std::sort(fd.etas.begin(), fd.etas.end());
    return fd;
}

bool tile_contains(const Multigraph& g, const TileDescriptor& t, const Cochain0& p) {
    if (p.size() != g.vertex_count())
        throw DomainError("point length does not match V(G)");
    if (p.sum() != 0) throw DomainError("tile_contains requires coordinate sum zero");
    if (!t.connected) throw DomainError("tile_contains requires connected G^m_f");
    // Need mu supported on G^m_f with ||mu||_inf <= 1/2 and d*(mu) = p - center.
    // As a flow problem: required net outflow at v is h(v) = -(p - center)(v).
    Cochain0 h = t.center - p;
    BigInt den = 1;
    for (auto& x : h.v) den = lcm(den, denominator(x));
    // capacities scaled by 2*den
    const int n = g.vertex_count();
    MaxFlow mf(n + 2);
    int s = n, tt = n + 1;
    BigInt need = 0;
    for (int v = 0; v < n; ++v) {
        BigInt hv = numerator(h[v]) * (den / denominator(h[v])) * 2;
        if (hv > 0) {
            mf.add_arc(s, v, hv);
            need += hv;
        } else if (hv < 0) {
            mf.add_arc(v, tt, -hv);
        }
    }
    for (int k = 0; k < g.edge_count(); ++k) {
        if (!t.sub_edges[k]) continue;
        mf.add_arc(g.tail(k), g.head(k), den);
        mf.add_arc(g.head(k), g.tail(k), den);
    }
    return mf.run(s, tt) == need;
}

bool tile_contains_strict(const Multigraph& g, const TileDescriptor& t,
                          const Cochain0& p) {
    if (p.size() != g.vertex_count())
        throw DomainError("point length does not match V(G)");
    if (p.sum() != 0) throw DomainError("tile_contains requires coordinate sum zero");
    if (!t.connected) throw DomainError("tile_contains requires connected G^m_f");
    Cochain0 h = p - t.center;
    const int n = g.vertex_count();
    for (unsigned long long mask = 1; mask + 1 < (1ull << n); ++mask) {
        Rat sum = 0;
        Int cut = 0;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) sum += h[v];
        for (int k = 0; k < g.edge_count(); ++k) {
            if (!t.sub_edges[k]) continue;
            if (((mask >> g.tail(k)) & 1) != ((mask >> g.head(k)) & 1)) ++cut;
        }
        if (2 * sum >= cut || 2 * sum <= -cut) return false;
    }
    return true;
}

NeighborInfo neighbor_across(const Multigraph& g, const LengthFunction& ell,
                             const TwistC1& tw, const std::vector<Int>& f,
                             const std::vector<char>& in_s) {
    TileDescriptor t = tile_point(g, ell, tw, f);
    if (!t.connected) throw DomainError("neighbor_across requires connected G^m_f");
    std::vector<char> comp_s(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) comp_s[v] = !in_s[v];
    if (!g.induced_connected(in_s, t.sub_edges) ||
        !g.induced_connected(comp_s, t.sub_edges))
        throw DomainError("neighbor_across requires S to induce a bond of G^m_f");

    NeighborInfo out;
    Int cap = ell.lcm_all();
    for (Int n = 1; n <= cap; ++n) {
        std::vector<Int> h = f;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (in_s[v]) h[v] += n;
        TileDescriptor th = tile_point(g, ell, tw, h);
        if (!th.connected) continue;
        out.h = std::move(h);
        out.n = n;
        // eta_f, eta_h: characteristic functions of the oriented cuts
        // E_{G^m}(V-S, S), extended by zero; eta = (eta_f + eta_h)/2.
        out.eta = Cochain1(g.edge_count());
        for (int k = 0; k < g.edge_count(); ++k) {
            bool ts = in_s[g.tail(k)], hs = in_s[g.head(k)];
            if (ts == hs) continue;
            Rat into_s = hs ? Rat(1, 2) : Rat(-1, 2);
            if (t.sub_edges[k]) out.eta[k] += into_s;
            if (th.sub_edges[k]) out.eta[k] += into_s;
        }
        return out;
    }
    throw DomainError("neighbor_across found no reconnecting n within the period");
}

std::optional<SharedFace> tiles_intersect(const Multigraph& g,
                                          const LengthFunction& ell,
                                          const TwistC1& tw,
                                          const std::vector<Int>& f1,
                                          const std::vector<Int>& f2) {
    TileDescriptor t1 = tile_point(g, ell, tw, f1);
    TileDescriptor t2 = tile_point(g, ell, tw, f2);
    if (!t1.connected || !t2.connected)
        throw DomainError("tiles_intersect requires connected subgraphs");
    SharedFace sf;
    std::vector<Int> diff(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) diff[v] = f2[v] - f1[v];
    std::vector<Int> levels(diff);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    sf.q = (int)levels.size();
    sf.level_of.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        sf.level_of[v] =
            (int)(std::lower_bound(levels.begin(), levels.end(), diff[v]) - levels.begin());
    sf.d1.assign(g.edge_count(), 0);
    sf.d2.assign(g.edge_count(), 0);
    for (int k = 0; k < g.edge_count(); ++k) {
        int lt = sf.level_of[g.tail(k)], lh = sf.level_of[g.head(k)];
        if (lt == lh) continue;
        if (t1.sub_edges[k]) sf.d1[k] = lt < lh ? 1 : -1;
        if (t2.sub_edges[k]) sf.d2[k] = lt < lh ? -1 : 1;
    }
    Cochain1 lhs = t1.dm, rhs = t2.dm;
    Rat half(1, 2);
    for (int k = 0; k < g.edge_count(); ++k) {
        lhs[k] += half * sf.d1[k];
        rhs[k] += half * sf.d2[k];
    }
    if (!(lhs == rhs)) return std::nullopt;
    sf.mu = lhs;
    std::vector<char> mask(g.edge_count(), 0);
    for (int k = 0; k < g.edge_count(); ++k)
        mask[k] = t1.sub_edges[k] && sf.d1[k] == 0;
    sf.codim = g.component_count(mask) - 1;
    return sf;
}

Cochain0 period_basis_vector(const Multigraph& g, const LengthFunction& ell, int v) {
    Int n = ell.lcm_all();
    Cochain1 dm(g.edge_count());
    for (int k = 0; k < g.edge_count(); ++k) {
        Int d = (g.head(k) == v ? 1 : 0) - (g.tail(k) == v ? 1 : 0);
        dm[k] = Rat(n * d, ell[k]);
    }
    return adjoint(g, dm);
}

Tiling enumerate_tiling(const Multigraph& g, const LengthFunction& ell,
                        const TwistC1& tw) {
    Tiling out;
    out.period = ell.lcm_all();
    const int n = g.vertex_count();
    const Int N = out.period;

    std::map<Cochain1, int> index_of;
    std::vector<Int> f(n, 0);
    // odometer over f(1..n-1) in [0, N)
    for (;;) {
        TileDescriptor t = tile_point(g, ell, tw, f);
        if (t.connected) {
            auto [it, fresh] = index_of.emplace(t.dm, (int)out.tiles.size());
            if (fresh) out.tiles.push_back(std::move(t));
        }
        int i = 1;
        while (i < n && ++f[i] == N) f[i++] = 0;
        if (i == n) break;
    }
    // map keeps tiles sorted by dm already (std::map order); reorder tiles
    std::vector<TileDescriptor> sorted;
    sorted.reserve(out.tiles.size());
    std::map<Cochain1, int> reindex;
    for (auto& [dm, idx] : index_of) {
        reindex.emplace(dm, (int)sorted.size());
        sorted.push_back(out.tiles[idx]);
    }
    out.tiles = std::move(sorted);

    out.neighbors.resize(out.tiles.size());
    for (int ti = 0; ti < (int)out.tiles.size(); ++ti) {
        const auto& t = out.tiles[ti];
        for (unsigned long long mask = 1; mask + 1 < (1ull << n); ++mask) {
            std::vector<char> in_s(n, 0), comp(n, 0);
            for (int v = 0; v < n; ++v) {
                in_s[v] = mask >> v & 1;
                comp[v] = !in_s[v];
            }
            if (!g.induced_connected(in_s, t.sub_edges) ||
                !g.induced_connected(comp, t.sub_edges))
                continue;
            NeighborInfo nb = neighbor_across(g, ell, tw, t.f, in_s);
            TileNeighborRecord rec;
            for (int v = 0; v < n; ++v)
                if (in_s[v]) rec.side.push_back(v);
            rec.n = nb.n;
            rec.eta = nb.eta;
            // reduce the neighbor into the fundamental box
            std::vector<Int> hn(n), shift(n, 0);
            Int base = nb.h[0];
            for (int v = 0; v < n; ++v) {
                Int val = nb.h[v] - base;
                shift[v] = floor_div(val, N);
                hn[v] = val - shift[v] * N;
            }
            TileDescriptor tn = tile_point(g, ell, tw, hn);
            auto it = reindex.find(tn.dm);
            if (it == reindex.end())
                throw DomainError("tiling enumeration is missing a neighbor class");
            rec.neighbor = it->second;
            rec.shift = std::move(shift);
            out.neighbors[ti].push_back(std::move(rec));
        }
    }
    return out;
}

std::vector<LocatedTile> locate_point(const Multigraph& g, const LengthFunction& ell,
                                      const TwistC1& tw, const Tiling& tiling,
                                      const Cochain0& p, Int window) {
    if (p.sum() != 0) throw DomainError("locate requires coordinate sum zero");
    const int n = g.vertex_count();
    std::vector<Cochain0> basis;
    for (int v = 1; v < n; ++v) basis.push_back(period_basis_vector(g, ell, v));
    std::vector<LocatedTile> hits;
    std::vector<Int> shift(n, 0);  // shift[0] stays 0
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            Cochain0 q = p;
            for (int i = 1; i < n; ++i)
                for (int j = 0; j < n; ++j) q[j] -= Rat(shift[i]) * basis[i - 1][j];
            for (int ti = 0; ti < (int)tiling.tiles.size(); ++ti) {
                if (tile_contains(g, tiling.tiles[ti], q)) {
                    LocatedTile lt;
                    lt.tile = ti;
                    lt.shift = shift;
                    lt.strict = tile_contains_strict(g, tiling.tiles[ti], q);
                    hits.push_back(std::move(lt));
                }
            }
            return;
        }
        for (Int s = -window; s <= window; ++s) {
            shift[v] = s;
            rec(v + 1);
        }
        shift[v] = 0;
    };
    rec(1);
    return hits;
}

}  // namespace cutvor
