#ifndef CUTVOR_DIVISORS_HPP
#define CUTVOR_DIVISORS_HPP

#include "lattice.hpp"

#include <memory>
#include <optional>

namespace cutvor {

// The subdivision H of (G, ell): every edge k of G becomes a path with
// ell_k - 1 new interior vertices.  Interior vertices are indexed along the
// canonical arrow; the reversal identity x_j^{k-} = x_{ell-j}^{k+} is a
// property of the index map, nothing is stored twice.
class Subdivision {
public:
    Subdivision(Multigraph g, LengthFunction ell);

    const Multigraph& base() const { return base_; }
    const LengthFunction& lengths() const { return ell_; }
    const Multigraph& h() const { return *h_; }
    int h_vertex_count() const { return h_->vertex_count(); }

    // Vertex x_j^e of H for the arrow over edge k (forward = canonical
    // direction), 0 <= j <= ell_k; j = 0 gives the arrow's tail.
    int x(int k, bool forward, Int j) const;

    // Inverse map: is w an interior vertex?  If so, of which edge/position
    // (relative to the canonical arrow)?
    bool is_interior(int w) const { return w >= base_.vertex_count(); }
    std::pair<int, Int> interior_of(int w) const;  // (edge, j along k+)

private:
    Multigraph base_;
    LengthFunction ell_;
    std::vector<Int> offset_;
    std::unique_ptr<Multigraph> h_;
};

class Divisor {
public:
    Divisor(std::shared_ptr<const Subdivision> host, std::vector<Int> coeffs)
        : host_(std::move(host)), c_(std::move(coeffs)) {
        if ((int)c_.size() != host_->h_vertex_count())
            throw DomainError("divisor length does not match V(H)");
    }
    static Divisor zero(std::shared_ptr<const Subdivision> host) {
        int n = host->h_vertex_count();
        return Divisor(std::move(host), std::vector<Int>(n, 0));
    }

    const Subdivision& host() const { return *host_; }
    std::shared_ptr<const Subdivision> host_ptr() const { return host_; }
    Int operator[](int w) const { return c_[w]; }
    Int& at(int w) { return c_[w]; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int degree() const {
        Int s = 0;
        for (Int x : c_) s += x;
        return s;
    }
    bool operator==(const Divisor& o) const { return c_ == o.c_; }
    bool operator<(const Divisor& o) const { return c_ < o.c_; }
    Divisor operator+(const Divisor& o) const {
        auto r = c_;
        for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
        return Divisor(host_, std::move(r));
    }

private:
    std::shared_ptr<const Subdivision> host_;
    std::vector<Int> c_;
};

// t^D: integer per oriented edge of G.
struct TwistFromDivisor {
    std::vector<Int> plus;   // value on k+
    std::vector<Int> minus;  // value on k-
    Int on(int k, bool forward) const { return forward ? plus[k] : minus[k]; }
};

// div(F) on H for F: V(H) -> Z; equals -Delta_H F with our sign of ord.
Divisor principal_divisor(std::shared_ptr<const Subdivision> host,
                          const std::vector<Int>& F);

bool is_g_admissible(const Divisor& d);

TwistFromDivisor twist_of(const Divisor& d);

// The unique extension of f with D + div(extension) G-admissible.
std::vector<Int> canonical_extension(const std::vector<Int>& f, const Divisor& d);

Divisor div_ell(const std::vector<Int>& f, const Divisor& d);

// delta_e(f; t^D) on the canonical arrow of k (forward) or its reverse.
Int delta_arrow(const Subdivision& s, const std::vector<Int>& f,
                const TwistFromDivisor& t, int k, bool forward);

// Chip-firing move M_v; requires D G-admissible.
Divisor chip_fire(const Divisor& d, int v);

// If D' ~ D (both admissible, same degree), the f with D' = D + div_ell(f;D),
// normalized by f(0) = 0; otherwise nullopt.
std::optional<std::vector<Int>> solve_equivalence(const Divisor& d, const Divisor& dp);

// Vertices to fire (with multiplicity, ascending index) turning D into D'.
std::optional<std::vector<int>> firing_sequence(const Divisor& d, const Divisor& dp);

}  // namespace cutvor

#endif
