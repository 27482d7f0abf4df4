#include "divisors.hpp"

namespace cutvor {

Subdivision::Subdivision(Multigraph g, LengthFunction ell)
    : base_(std::move(g)), ell_(std::move(ell)) {
    if ((int)ell_.ell.size() != base_.edge_count())
        throw DomainError("length function size does not match edge count");
    const int m = base_.edge_count();
    offset_.resize(m);
    Int acc = 0;
    for (int k = 0; k < m; ++k) {
        offset_[k] = acc;
        acc += ell_[k] - 1;
    }
    int nh = base_.vertex_count() + (int)acc;
    std::vector<std::pair<int, int>> segs;
    segs.reserve((size_t)acc + m);
    for (int k = 0; k < m; ++k) {
        int prev = base_.tail(k);
        for (Int j = 1; j < ell_[k]; ++j) {
            int w = base_.vertex_count() + (int)(offset_[k] + j - 1);
            segs.push_back({prev, w});
            prev = w;
        }
        segs.push_back({prev, base_.head(k)});
    }
    h_ = std::make_unique<Multigraph>(nh, std::move(segs));
}

int Subdivision::x(int k, bool forward, Int j) const {
    Int l = ell_[k];
    Int jj = forward ? j : l - j;
    if (jj == 0) return base_.tail(k);
    if (jj == l) return base_.head(k);
    return base_.vertex_count() + (int)(offset_[k] + jj - 1);
}

std::pair<int, Int> Subdivision::interior_of(int w) const {
    Int idx = w - base_.vertex_count();
    int lo = 0, hi = base_.edge_count() - 1;
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (offset_[mid] <= idx)
            lo = mid;
        else
            hi = mid - 1;
    }
    return {lo, idx - offset_[lo] + 1};
}

Divisor principal_divisor(std::shared_ptr<const Subdivision> host,
                          const std::vector<Int>& F) {
    const Multigraph& h = host->h();
    if ((int)F.size() != h.vertex_count())
        throw DomainError("function length does not match V(H)");
    std::vector<Int> d(F.size(), 0);
    for (int k = 0; k < h.edge_count(); ++k) {
        Int diff = F[h.head(k)] - F[h.tail(k)];
        // ord contributes f(other)-f(v) at each endpoint
        d[h.tail(k)] += diff;
        d[h.head(k)] -= diff;
    }
    return Divisor(std::move(host), std::move(d));
}

bool is_g_admissible(const Divisor& d) {
    const Subdivision& s = d.host();
    for (int k = 0; k < s.base().edge_count(); ++k) {
        int ones = 0;
        for (Int j = 1; j < s.lengths()[k]; ++j) {
            Int c = d[s.x(k, true, j)];
            if (c == 0) continue;
            if (c != 1) return false;
            if (++ones > 1) return false;
        }
    }
    return true;
}

TwistFromDivisor twist_of(const Divisor& d) {
    const Subdivision& s = d.host();
    const int m = s.base().edge_count();
    TwistFromDivisor t;
    t.plus.assign(m, 0);
    t.minus.assign(m, 0);
    for (int k = 0; k < m; ++k) {
        Int l = s.lengths()[k];
        for (Int j = 1; j < l; ++j) {
            Int c = d[s.x(k, true, j)];
            t.plus[k] += (l - j) * c;  // x_j on k+
            t.minus[k] += j * c;       // same vertex is x_{l-j} on k-
        }
    }
    return t;
}

Int delta_arrow(const Subdivision& s, const std::vector<Int>& f,
                const TwistFromDivisor& t, int k, bool forward) {
    int u = forward ? s.base().tail(k) : s.base().head(k);
    int v = forward ? s.base().head(k) : s.base().tail(k);
    return floor_div(f[v] - f[u] + t.on(k, forward), s.lengths()[k]);
}

std::vector<Int> canonical_extension(const std::vector<Int>& f, const Divisor& d) {
    const Subdivision& s = d.host();
    if ((int)f.size() != s.base().vertex_count())
        throw DomainError("function length does not match V(G)");
    TwistFromDivisor t = twist_of(d);
    std::vector<Int> ext(s.h_vertex_count(), 0);
    for (int v = 0; v < s.base().vertex_count(); ++v) ext[v] = f[v];
    for (int k = 0; k < s.base().edge_count(); ++k) {
        Int l = s.lengths()[k];
        int u = s.base().tail(k), v = s.base().head(k);
        Int w = f[v] - f[u] + t.plus[k];
        Int delta = floor_div(w, l);
        Int r = w - delta * l;  // remainder in [0, l)
        // Properties (1')-(2'): s_1 = delta, rho_j = 1 exactly at j = l - r.
        Int sj = delta, acc = 0;
        for (Int j = 1; j < l; ++j) {
            acc += sj;
            ext[s.x(k, true, j)] = f[u] + acc;
            Int rho = (r > 0 && j == l - r) ? 1 : 0;
            sj = sj - d[s.x(k, true, j)] + rho;
        }
    }
    return ext;
}

Divisor div_ell(const std::vector<Int>& f, const Divisor& d) {
    return principal_divisor(d.host_ptr(), canonical_extension(f, d));
}

Divisor chip_fire(const Divisor& d, int v) {
    if (!is_g_admissible(d))
        throw DomainError("chip_fire requires a G-admissible divisor");
    const Subdivision& s = d.host();
    if (v < 0 || v >= s.base().vertex_count())
        throw DomainError("chip_fire vertex out of range");
    // C_v: the vertex v plus, along each arrow leaving v, the interior
    // vertices up to and including the one carrying the chip.
    std::vector<Int> chi(s.h_vertex_count(), 0);
    chi[v] = 1;
    for (int k : s.base().incident(v)) {
        bool forward = s.base().tail(k) == v;
        Int l = s.lengths()[k];
        Int je = 0;
        for (Int j = 1; j < l; ++j)
            if (d[s.x(k, forward, j)] == 1) {
                je = j;
                break;
            }
        for (Int j = 1; j <= je; ++j) chi[s.x(k, forward, j)] = 1;
    }
    return d + principal_divisor(d.host_ptr(), chi);
}

std::optional<std::vector<Int>> solve_equivalence(const Divisor& d, const Divisor& dp) {
    if (!is_g_admissible(d) || !is_g_admissible(dp))
        throw DomainError("solve_equivalence requires G-admissible divisors");
    if (d.degree() != dp.degree()) return std::nullopt;
    const Subdivision& s = d.host();
    const Multigraph& h = s.h();
    const int nh = h.vertex_count();
    // D' = D + div(F) = D - Delta_H F, so Delta_H F = D - D'.
    Cochain0 rhs(nh);
    for (int w = 0; w < nh; ++w) rhs[w] = Rat(d[w] - dp[w]);
    Cochain0 F = laplacian_solve(h, rhs);
    std::vector<Int> f(s.base().vertex_count());
    for (int w = 0; w < nh; ++w)
        if (!is_integer(F[w])) return std::nullopt;
    for (int v = 0; v < s.base().vertex_count(); ++v)
        f[v] = numerator(F[v]).convert_to<Int>();
    return f;
}

std::optional<std::vector<int>> firing_sequence(const Divisor& d, const Divisor& dp) {
    auto f = solve_equivalence(d, dp);
    if (!f) return std::nullopt;
    Int mn = *std::min_element(f->begin(), f->end());
    std::vector<int> seq;
    for (int v = 0; v < (int)f->size(); ++v)
        for (Int i = mn; i < (*f)[v]; ++i) seq.push_back(v);
    return seq;
}

}  // namespace cutvor
