#include "support.hpp"

namespace cutvor::testsupport {

Multigraph k3() { return Multigraph(3, {{0, 1}, {0, 2}, {1, 2}}); }
Multigraph p3() { return Multigraph(3, {{0, 1}, {1, 2}}); }
Multigraph c4() { return Multigraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
Multigraph k4() {
    return Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}
Multigraph theta3() { return Multigraph(2, {{0, 1}, {0, 1}, {0, 1}}); }

Multigraph random_connected_multigraph(std::mt19937_64& rng, int min_v, int max_v,
                                       int max_e) {
    for (;;) {
        int n = min_v + (int)(rng() % (max_v - min_v + 1));
        int lo = std::max(1, n - 1);
        int m = lo + (int)(rng() % (max_e - lo + 1));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < m; ++i) {
            int u = (int)(rng() % n), v = (int)(rng() % n);
            if (u == v) {
                --i;
                continue;
            }
            edges.push_back({u, v});
        }
        try {
            return Multigraph(n, edges);
        } catch (const DomainError&) {
            continue;  // disconnected draw, retry
        }
    }
}

std::vector<Int> random_fn(std::mt19937_64& rng, int n, Int lo, Int hi) {
    std::vector<Int> f(n);
    for (int v = 0; v < n; ++v) f[v] = lo + (Int)(rng() % (unsigned long long)(hi - lo + 1));
    return f;
}

BigInt count_spanning_trees_brute(const Multigraph& g) {
    const int n = g.vertex_count(), m = g.edge_count();
    if (n == 1) return 1;
    BigInt count = 0;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if ((int)pick.size() == n - 1) {
            std::vector<char> mask(m, 0);
            for (int k : pick) mask[k] = 1;
            if (g.component_count(mask) == 1) ++count;
            return;
        }
        for (int k = from; k < m; ++k) {
            pick.push_back(k);
            rec(k + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return count;
}

Cochain0 adjoint_by_matrix(const Multigraph& g, const Cochain1& mu) {
    // incidence matrix B: rows vertices, columns edges (canonical arrows),
    // +1 at the head, -1 at the tail; d* mu = B mu.
    const int n = g.vertex_count(), m = g.edge_count();
    std::vector<std::vector<Rat>> b(n, std::vector<Rat>(m, Rat(0)));
    for (int k = 0; k < m; ++k) {
        b[g.head(k)][k] = 1;
        b[g.tail(k)][k] = -1;
    }
    Cochain0 out(n);
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < m; ++k) out[v] += b[v][k] * mu[k];
    return out;
}

std::vector<Rat> gauss_solve(std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    const int n = (int)a.size();
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0) {
                p = i;
                break;
            }
        if (p < 0) throw std::runtime_error("gauss_solve: singular");
        std::swap(a[col], a[p]);
        std::swap(b[col], b[p]);
        Rat piv = a[col][col];
        for (int j = 0; j < n; ++j) a[col][j] /= piv;
        b[col] /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (int j = 0; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    return b;
}

}  // namespace cutvor::testsupport
