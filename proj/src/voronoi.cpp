#include "voronoi.hpp"

#include <algorithm>
#include <functional>

namespace cutvor {

GeneralizedCut::GeneralizedCut(const Multigraph& g, std::vector<std::vector<int>> parts)
    : parts_(std::move(parts)) {
    if ((int)parts_.size() < 2)
        throw DomainError("generalized cut needs at least two parts");
    part_of_.assign(g.vertex_count(), -1);
    for (int i = 0; i < (int)parts_.size(); ++i) {
        if (parts_[i].empty()) throw DomainError("generalized cut part is empty");
        for (int v : parts_[i]) {
            if (v < 0 || v >= g.vertex_count() || part_of_[v] != -1)
                throw DomainError("generalized cut is not a partition of V");
            part_of_[v] = i;
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (part_of_[v] < 0) throw DomainError("generalized cut does not cover V");
    for (int k = 0; k < g.edge_count(); ++k)
        if (std::abs(part_of_[g.tail(k)] - part_of_[g.head(k)]) >= 2)
            throw DomainError("generalized cut has an edge skipping a part");
}

Cochain0 GeneralizedCut::characteristic(const Multigraph& g) const {
    Cochain0 f(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) f[v] = part_of_[v] + 1;
    return f;
}

namespace {

// Iterate over proper nonempty vertex subsets S; calls fn(in_s flags).
template <class F>
void for_each_subset(int n, F&& fn) {
    for (unsigned long long mask = 1; mask + 1 < (1ull << n); ++mask) {
        std::vector<char> in_s(n, 0);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) in_s[v] = 1;
        fn(in_s);
    }
}

// Sum of eta over the oriented cut E(S, V-S) and the cut size.
std::pair<Rat, Int> cut_sum(const Multigraph& g, const Cochain1& eta,
                            const std::vector<char>& in_s) {
    Rat sum = 0;
    Int size = 0;
    for (int k = 0; k < g.edge_count(); ++k) {
        bool tu = in_s[g.tail(k)], hv = in_s[g.head(k)];
        if (tu == hv) continue;
        ++size;
        // arrow from S to V-S: forward if tail in S
        sum += eta.on(k, tu);
    }
    return {sum, size};
}

}  // namespace

bool voronoi_membership(const Multigraph& g, const Cochain1& eta) {
    if (!is_in_cut_space(g, eta))
        throw DomainError("voronoi_membership requires eta in the cut space");
    bool ok = true;
    for_each_subset(g.vertex_count(), [&](const std::vector<char>& in_s) {
        if (!ok) return;
        auto [sum, size] = cut_sum(g, eta, in_s);
        if (2 * sum > size || 2 * sum < -size) ok = false;
    });
    return ok;
}

bool voronoi_membership_strict(const Multigraph& g, const Cochain1& eta) {
    if (!is_in_cut_space(g, eta))
        throw DomainError("voronoi_membership requires eta in the cut space");
    bool ok = true;
    for_each_subset(g.vertex_count(), [&](const std::vector<char>& in_s) {
        if (!ok) return;
        auto [sum, size] = cut_sum(g, eta, in_s);
        if (2 * sum >= size || 2 * sum <= -size) ok = false;
    });
    return ok;
}

std::optional<GeneralizedCut> is_generalized_cut_element(const Multigraph& g,
                                                         const Cochain1& beta) {
    for (auto& x : beta.v)
        if (!is_integer(x)) throw DomainError("generalized cut test requires integral beta");
    for (auto& x : beta.v)
        if (x > 1 || x < -1) return std::nullopt;
    if (!is_in_cut_space(g, beta)) return std::nullopt;
    Cochain0 f = integrate_cut(g, beta);
    // level sets, ascending
    std::vector<Rat> levels;
    for (auto& x : f.v) levels.push_back(x);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    if (levels.size() < 2) return std::nullopt;  // beta = 0 is not a generalized cut
    std::vector<std::vector<int>> parts(levels.size());
    for (int v = 0; v < g.vertex_count(); ++v) {
        int i = (int)(std::lower_bound(levels.begin(), levels.end(), f[v]) - levels.begin());
        parts[i].push_back(v);
    }
    return GeneralizedCut(g, std::move(parts));
}

bool cells_intersect(const Multigraph& g, const Cochain1& beta, const Cochain1& lambda) {
    Cochain1 diff = beta - lambda;
    bool zero = true;
    for (auto& x : diff.v) zero = zero && x == 0;
    if (zero) return true;
    return is_generalized_cut_element(g, diff).has_value();
}

int cut_rank(const Multigraph& g, const GeneralizedCut& c) {
    int s = c.part_count();
    int kappa = 0;
    std::vector<char> in_c(g.vertex_count(), 0);
    for (int i = 0; i + 1 < s; ++i) {
        for (int v : c.parts()[i]) in_c[v] = 1;
        std::vector<char> in_rest(g.vertex_count(), 0);
        for (int v = 0; v < g.vertex_count(); ++v) in_rest[v] = !in_c[v];
        kappa += induced_component_count(g, in_c) + induced_component_count(g, in_rest) - 1;
    }
    return kappa;
}

std::vector<Bond> enumerate_bonds(const Multigraph& g) {
    std::vector<Bond> out;
    for_each_subset(g.vertex_count(), [&](const std::vector<char>& in_s) {
        std::vector<char> comp(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) comp[v] = !in_s[v];
        if (!g.induced_connected(in_s) || !g.induced_connected(comp)) return;
        Bond b;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (in_s[v]) b.side.push_back(v);
        b.beta = cut_cochain(g, in_s);
        out.push_back(std::move(b));
    });
    std::sort(out.begin(), out.end(),
              [](const Bond& a, const Bond& b) { return a.beta < b.beta; });
    return out;
}

std::vector<Cochain1> sum_of_bonds(const Multigraph& g, const std::vector<char>& in_s) {
    const int n = g.vertex_count();
    std::vector<char> comp(n);
    for (int v = 0; v < n; ++v) comp[v] = !in_s[v];
    auto split = [&](const std::vector<char>& set) {
        // connected components of G[set] as flag vectors
        std::vector<std::vector<char>> parts;
        std::vector<char> seen(n, 0);
        for (int s0 = 0; s0 < n; ++s0) {
            if (!set[s0] || seen[s0]) continue;
            std::vector<char> part(n, 0);
            std::vector<int> stack{s0};
            seen[s0] = part[s0] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int k : g.incident(v)) {
                    int w = g.other_end(k, v);
                    if (set[w] && !seen[w]) {
                        seen[w] = part[w] = 1;
                        stack.push_back(w);
                    }
                }
            }
            parts.push_back(std::move(part));
        }
        return parts;
    };
    auto s_parts = split(in_s);
    if (s_parts.size() > 1) {
        std::vector<Cochain1> out;
        for (auto& p : s_parts) {
            auto sub = sum_of_bonds(g, p);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    }
    auto c_parts = split(comp);
    if (c_parts.size() > 1) {
        std::vector<Cochain1> out;
        for (auto& y : c_parts) {
            std::vector<char> z(n);
            for (int v = 0; v < n; ++v) z[v] = !y[v];
            auto sub = sum_of_bonds(g, z);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    }
    return {cut_cochain(g, in_s)};
}

std::vector<Cao> enumerate_cac(const Multigraph& g) {
    const int n = g.vertex_count();
    std::map<std::string, Cao> seen;
    // Ordered set partitions as surjections V -> {0..s-1} whose image is a
    // prefix of the naturals.
    std::vector<int> level(n, 0);
    auto emit = [&]() {
        int s = *std::max_element(level.begin(), level.end()) + 1;
        Cao cao;
        cao.arrow.assign(g.edge_count(), 0);
        for (int k = 0; k < g.edge_count(); ++k) {
            int lt = level[g.tail(k)], lh = level[g.head(k)];
            if (lt < lh)
                cao.arrow[k] = 1;
            else if (lt > lh)
                cao.arrow[k] = -1;
        }
        auto key = cao.key();
        if (seen.count(key)) return;
        cao.witness.assign(s, {});
        for (int v = 0; v < n; ++v) cao.witness[level[v]].push_back(v);
        seen.emplace(std::move(key), std::move(cao));
    };
    // Ordered set partitions = level maps V -> {0..s-1} surjective onto a
    // prefix of the naturals.
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            std::vector<char> used(n, 0);
            int mx = 0;
            for (int x : level) {
                used[x] = 1;
                mx = std::max(mx, x);
            }
            for (int l = 0; l <= mx; ++l)
                if (!used[l]) return;
            emit();
            return;
        }
        for (int l = 0; l < n; ++l) {
            level[v] = l;
            rec(v + 1);
        }
    };
    rec(0);
    std::vector<Cao> out;
    out.reserve(seen.size());
    for (auto& [k, c] : seen) out.push_back(std::move(c));
    return out;
}

Cochain1 face_vertex(const Multigraph& g, const Cao& d) {
    if (!d.orients_all())
        throw DomainError("face_vertex requires a total orientation");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    // Topological order = the inducing ordered partition into singletons;
    // reject cyclic orientations.
    std::vector<int> indeg(n, 0);
    for (int k = 0; k < m; ++k) indeg[d.arrow[k] > 0 ? g.head(k) : g.tail(k)]++;
    std::vector<int> order;
    std::vector<int> deg = indeg;
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 0) queue.push_back(v);
    std::vector<char> removed(n, 0);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        order.push_back(v);
        removed[v] = 1;
        for (int k : g.incident(v)) {
            int src = d.arrow[k] > 0 ? g.tail(k) : g.head(k);
            if (src != v) continue;
            int w = g.other_end(k, v);
            if (--deg[w] == 0) queue.push_back(w);
        }
    }
    if ((int)order.size() != n)
        throw DomainError("face_vertex requires an acyclic orientation");

    // Equation system from the codimension lemma: for each prefix split
    // C_i | S_i of a topological order, every component Y of G[C_i] yields
    // 2<x, d(chi_Y)> = -|cut(Y)| and every component Z of G[S_i] yields
    // 2<x, d(chi_Z)> = +|cut(Z)|.  Solve for x = d(gamma), gamma(0) = 0.
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    RMat a;
    std::vector<Rat> b;
    auto add_eq = [&](const std::vector<char>& set, int sign) {
        // 2<d(gamma), d(chi_set)> = 2 * sum_{v in set} (Delta gamma)(v);
        // expand in the unknowns gamma(1..n-1).
        std::vector<Rat> row(n - 1, Rat(0));
        Int cut = 0;
        for (int k = 0; k < m; ++k) {
            int u = g.tail(k), v = g.head(k);
            if (set[u] == set[v]) continue;
            ++cut;
            int in = set[u] ? u : v, outv = set[u] ? v : u;
            // contribution to 2*sum_{set} Delta gamma: 2*(gamma(in)-gamma(out))
            if (in > 0) row[in - 1] += 2;
            if (outv > 0) row[outv - 1] -= 2;
        }
        a.push_back(std::move(row));
        b.push_back(Rat(sign * cut));
    };
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<char> c(n, 0), s(n, 0);
        for (int j = 0; j <= i; ++j) c[order[j]] = 1;
        for (int j = i + 1; j < n; ++j) s[order[j]] = 1;
        for (auto& part : induced_component_flags(g, c)) add_eq(part, -1);
        for (auto& part : induced_component_flags(g, s)) add_eq(part, +1);
    }
    auto sol = solve_system(a, b);
    if (!sol.consistent || !sol.unique)
        throw DomainError("face_vertex system not uniquely solvable");
    Cochain0 gamma(n);
    for (int v = 1; v < n; ++v) gamma[v] = sol.x[v - 1];
    Cochain1 nu = coboundary(g, gamma);
    if (!voronoi_membership(g, nu))
        throw DomainError("face_vertex produced a point outside the cell");
    return nu;
}

FacePoset face_poset(const Multigraph& g) {
    FacePoset fp;
    auto cacs = enumerate_cac(g);
    // vertices of the cell: nu^D for total acyclic orientations D
    std::map<Cochain1, int> point_id;
    std::vector<std::pair<Cao, int>> fulls;  // cao + point id
    for (auto& c : cacs) {
        if (!c.orients_all()) continue;
        Cochain1 nu = face_vertex(g, c);
        auto [it, fresh] = point_id.emplace(nu, (int)fp.points.size());
        if (fresh) fp.points.push_back(nu);
        fulls.push_back({c, it->second});
    }
    auto bonds = enumerate_bonds(g);
    // which cell vertices lie on which bond hyperplane F_beta
    std::vector<std::vector<char>> on_hyp(fp.points.size(),
                                          std::vector<char>(bonds.size(), 0));
    for (int p = 0; p < (int)fp.points.size(); ++p)
        for (int bi = 0; bi < (int)bonds.size(); ++bi) {
            Rat lhs = 2 * inner1(fp.points[p], bonds[bi].beta);
            Rat rhs = inner1(bonds[bi].beta, bonds[bi].beta);
            on_hyp[p][bi] = lhs == rhs;
        }

    std::map<std::vector<int>, int> by_vertex_set;
    for (auto& c : cacs) {
        Face f;
        f.cao = c;
        for (auto& [fc, pid] : fulls)
            if (Cao::arrows_subset(c, fc)) f.vertex_ids.push_back(pid);
        std::sort(f.vertex_ids.begin(), f.vertex_ids.end());
        f.vertex_ids.erase(std::unique(f.vertex_ids.begin(), f.vertex_ids.end()),
                           f.vertex_ids.end());
        // U_D: bonds with positive support inside E(D)
        for (auto& b : bonds) {
            bool inside = true;
            for (int k = 0; k < g.edge_count() && inside; ++k) {
                if (b.beta[k] == 1 && f.cao.arrow[k] != 1) inside = false;
                if (b.beta[k] == -1 && f.cao.arrow[k] != -1) inside = false;
            }
            if (inside) f.bonds_through.push_back(b.beta);
        }
        std::vector<char> mask(g.edge_count(), 1);
        for (int k = 0; k < g.edge_count(); ++k) mask[k] = f.cao.arrow[k] == 0;
        f.codim = g.component_count(mask) - 1;
        auto [it, fresh] = by_vertex_set.emplace(f.vertex_ids, 0);
        if (!fresh) fp.vertex_sets_distinct = false;
        fp.faces.push_back(std::move(f));
    }
    std::sort(fp.faces.begin(), fp.faces.end(),
              [](const Face& a, const Face& b) { return a.cao.key() < b.cao.key(); });

    // Order isomorphism: vertex-set inclusion must match reverse arrow-set
    // inclusion, on all pairs.
    auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    for (size_t i = 0; i < fp.faces.size() && fp.order_isomorphic; ++i)
        for (size_t j = 0; j < fp.faces.size(); ++j) {
            bool geom = subset(fp.faces[i].vertex_ids, fp.faces[j].vertex_ids);
            bool comb = Cao::arrows_subset(fp.faces[j].cao, fp.faces[i].cao);
            if (geom != comb) {
                fp.order_isomorphic = false;
                break;
            }
        }

    // phi from the geometry: U_f = bonds containing every vertex of the
    // face; phi(f) = union of their positive supports; must recover the cao.
    for (auto& f : fp.faces) {
        std::vector<signed char> phi(g.edge_count(), 0);
        for (int bi = 0; bi < (int)bonds.size(); ++bi) {
            bool all_on = !f.vertex_ids.empty();
            for (int pid : f.vertex_ids)
                if (!on_hyp[pid][bi]) {
                    all_on = false;
                    break;
                }
            if (!all_on) continue;
            for (int k = 0; k < g.edge_count(); ++k) {
                if (bonds[bi].beta[k] == 1) phi[k] = 1;
                if (bonds[bi].beta[k] == -1) phi[k] = -1;
            }
        }
        if (phi != f.cao.arrow) fp.phi_inverts = false;
    }

    int maxcodim = 0;
    for (auto& f : fp.faces) maxcodim = std::max(maxcodim, f.codim);
    fp.f_vector.assign(maxcodim + 1, 0);
    for (auto& f : fp.faces) fp.f_vector[f.codim]++;
    return fp;
}

}  // namespace cutvor
