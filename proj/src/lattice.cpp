#include "lattice.hpp"

namespace cutvor {

Cochain1 coboundary(const Multigraph& g, const Cochain0& f) {
    if (f.size() != g.vertex_count())
        throw DomainError("cochain size does not match vertex count");
    Cochain1 out(g.edge_count());
    for (int k = 0; k < g.edge_count(); ++k)
        out[k] = f[g.head(k)] - f[g.tail(k)];
    return out;
}

Cochain0 adjoint(const Multigraph& g, const Cochain1& mu) {
    Cochain0 out(g.vertex_count());
    for (int k = 0; k < g.edge_count(); ++k) {
        out[g.head(k)] += mu[k];
        out[g.tail(k)] -= mu[k];
    }
    return out;
}

Cochain0 laplacian_apply(const Multigraph& g, const Cochain0& f) {
    return adjoint(g, coboundary(g, f));
}

Cochain1 cut_cochain(const Multigraph& g, const std::vector<char>& in_c) {
    Cochain1 out(g.edge_count());
    for (int k = 0; k < g.edge_count(); ++k)
        out[k] = Rat((in_c[g.head(k)] ? 1 : 0) - (in_c[g.tail(k)] ? 1 : 0));
    return out;
}

BigInt spanning_tree_count(const Multigraph& g) {
    const int n = g.vertex_count();
    if (n == 1) return 1;
    IMat lap(n - 1, std::vector<BigInt>(n - 1, 0));
    for (int k = 0; k < g.edge_count(); ++k) {
        int u = g.tail(k), v = g.head(k);
        if (u > 0) lap[u - 1][u - 1] += 1;
        if (v > 0) lap[v - 1][v - 1] += 1;
        if (u > 0 && v > 0) {
            lap[u - 1][v - 1] -= 1;
            lap[v - 1][u - 1] -= 1;
        }
    }
    return det_bareiss(std::move(lap));
}

bool is_in_cut_space(const Multigraph& g, const Cochain1& mu) {
    auto tree = g.spanning_tree();
    // Cycle sums: each non-tree edge closes one fundamental cycle.  The sum
    // of mu around it equals mu(e) minus the tree-path potential difference.
    Cochain0 pot(g.vertex_count());
    // potential of v = sum of mu along tree path 0 -> v
    std::vector<char> done(g.vertex_count(), 0);
    done[0] = 1;
    // vertices in BFS-from-root order: follow parents
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (done[v]) continue;
        std::vector<int> chain;
        int w = v;
        while (!done[w]) {
            chain.push_back(w);
            w = tree.parent[w];
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            int x = *it;
            int k = tree.parent_edge[x];
            bool fwd = g.head(k) == x;  // arrow parent->x
            pot[x] = pot[tree.parent[x]] + mu.on(k, fwd);
            done[x] = 1;
        }
    }
    for (int k = 0; k < g.edge_count(); ++k) {
        if (tree.in_tree[k]) continue;
        if (mu[k] != pot[g.head(k)] - pot[g.tail(k)]) return false;
    }
    return true;
}

Cochain0 laplacian_solve(const Multigraph& g, const Cochain0& h) {
    if (h.size() != g.vertex_count())
        throw DomainError("cochain size does not match vertex count");
    if (h.sum() != 0)
        throw DomainError("laplacian_solve requires coordinate sum zero");
    const int n = g.vertex_count();
    Cochain0 f(n);
    if (n == 1) return f;
    RMat a(n - 1, std::vector<Rat>(n - 1, Rat(0)));
    std::vector<Rat> b(n - 1);
    for (int k = 0; k < g.edge_count(); ++k) {
        int u = g.tail(k), v = g.head(k);
        if (u > 0) a[u - 1][u - 1] += 1;
        if (v > 0) a[v - 1][v - 1] += 1;
        if (u > 0 && v > 0) {
            a[u - 1][v - 1] -= 1;
            a[v - 1][u - 1] -= 1;
        }
    }
    for (int i = 1; i < n; ++i) b[i - 1] = h[i];
    auto sol = solve_system(a, b);
    if (!sol.consistent || !sol.unique)
        throw DomainError("reduced Laplacian solve failed");  // unreachable: connected
    for (int i = 1; i < n; ++i) f[i] = sol.x[i - 1];
    return f;
}

Rat quadratic_form_q(const Multigraph& g, const Cochain0& h) {
    Cochain0 f = laplacian_solve(g, h);
    return inner0(f, h);
}

Cochain0 integrate_cut(const Multigraph& g, const Cochain1& mu) {
    if (!is_in_cut_space(g, mu))
        throw DomainError("cochain is not in the cut space");
    auto tree = g.spanning_tree();
    Cochain0 f(g.vertex_count());
    std::vector<char> done(g.vertex_count(), 0);
    done[0] = 1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (done[v]) continue;
        std::vector<int> chain;
        int w = v;
        while (!done[w]) {
            chain.push_back(w);
            w = tree.parent[w];
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            int x = *it;
            int k = tree.parent_edge[x];
            bool fwd = g.head(k) == x;
            f[x] = f[tree.parent[x]] + mu.on(k, fwd);
            done[x] = 1;
        }
    }
    return f;
}

}  // namespace cutvor
