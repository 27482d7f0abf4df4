#ifndef CUTVOR_GRAPH_HPP
#define CUTVOR_GRAPH_HPP

#include "rational.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace cutvor {

// Loopless connected multigraph.  Each edge k carries a canonical arrow
// k+ = tail(k) -> head(k) with tail(k) <= head(k) by vertex index (parallel
// edges keep their input order and share the canonical direction).  The
// oriented edge set E consists of the arrows k+ and their reversals k-.
class Multigraph {
public:
    Multigraph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
        : n_(vertex_count) {
        if (n_ <= 0) throw DomainError("graph must have at least one vertex");
        edges_.reserve(edge_list.size());
        for (auto [u, v] : edge_list) {
            if (u < 0 || v < 0 || u >= n_ || v >= n_)
                throw DomainError("edge endpoint out of range");
            if (u == v) throw DomainError("loop edges are not allowed");
            if (u > v) std::swap(u, v);
            edges_.push_back({u, v});
        }
        inc_.assign(n_, {});
        for (int k = 0; k < (int)edges_.size(); ++k) {
            inc_[edges_[k].first].push_back(k);
            inc_[edges_[k].second].push_back(k);
        }
        if (!connected()) throw DomainError("graph must be connected");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return (int)edges_.size(); }
    int tail(int k) const { return edges_[k].first; }
    int head(int k) const { return edges_[k].second; }
    const std::vector<int>& incident(int v) const { return inc_[v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int other_end(int k, int v) const {
        return edges_[k].first == v ? edges_[k].second : edges_[k].first;
    }

    // Components of the spanning subgraph restricted to edges with mask!=0
    // (mask empty means all edges).  Returns component index per vertex.
    std::vector<int> components(const std::vector<char>& edge_mask = {}) const {
        std::vector<int> comp(n_, -1);
        int c = 0;
        for (int s = 0; s < n_; ++s) {
            if (comp[s] >= 0) continue;
            comp[s] = c;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int k : inc_[v]) {
                    if (!edge_mask.empty() && !edge_mask[k]) continue;
                    int w = other_end(k, v);
                    if (comp[w] < 0) {
                        comp[w] = c;
                        stack.push_back(w);
                    }
                }
            }
            ++c;
        }
        return comp;
    }

    int component_count(const std::vector<char>& edge_mask = {}) const {
        auto c = components(edge_mask);
        return *std::max_element(c.begin(), c.end()) + 1;
    }

    // Is the induced subgraph on vertex set S (given as membership flags)
    // connected, using only edges with mask!=0 whose both ends are in S?
    bool induced_connected(const std::vector<char>& in_s,
                           const std::vector<char>& edge_mask = {}) const {
        int start = -1, want = 0;
        for (int v = 0; v < n_; ++v)
            if (in_s[v]) {
                if (start < 0) start = v;
                ++want;
            }
        if (want == 0) return false;
        std::vector<char> seen(n_, 0);
        seen[start] = 1;
        int got = 1;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int k : inc_[v]) {
                if (!edge_mask.empty() && !edge_mask[k]) continue;
                int w = other_end(k, v);
                if (in_s[w] && !seen[w]) {
                    seen[w] = 1;
                    ++got;
                    stack.push_back(w);
                }
            }
        }
        return got == want;
    }

    // A spanning tree as a list of edge indices plus a parent structure
    // rooted at vertex 0 (parent edge per vertex, -1 at the root).
    struct SpanningTree {
        std::vector<int> parent_edge;
        std::vector<int> parent;
        std::vector<char> in_tree;
    };
    SpanningTree spanning_tree() const {
        SpanningTree t;
        t.parent_edge.assign(n_, -1);
        t.parent.assign(n_, -1);
        t.in_tree.assign(edge_count(), 0);
        std::vector<char> seen(n_, 0);
        seen[0] = 1;
        std::vector<int> stack{0};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int k : inc_[v]) {
                int w = other_end(k, v);
                if (!seen[w]) {
                    seen[w] = 1;
                    t.parent_edge[w] = k;
                    t.parent[w] = v;
                    t.in_tree[k] = 1;
                    stack.push_back(w);
                }
            }
        }
        return t;
    }

private:
    bool connected() const {
        if (n_ == 1) return true;
        return component_count() == 1;
    }

    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> inc_;
};

// Exact rational function on vertices.
struct Cochain0 {
    std::vector<Rat> v;

    Cochain0() = default;
    explicit Cochain0(int n) : v(n) {}
    explicit Cochain0(std::vector<Rat> vals) : v(std::move(vals)) {}

    int size() const { return (int)v.size(); }
    Rat& operator[](int i) { return v[i]; }
    const Rat& operator[](int i) const { return v[i]; }

    Rat sum() const {
        Rat s = 0;
        for (auto& x : v) s += x;
        return s;
    }
    bool operator==(const Cochain0& o) const { return v == o.v; }
    bool operator<(const Cochain0& o) const { return v < o.v; }
    Cochain0 operator+(const Cochain0& o) const {
        Cochain0 r(*this);
        for (int i = 0; i < size(); ++i) r.v[i] += o.v[i];
        return r;
    }
    Cochain0 operator-(const Cochain0& o) const {
        Cochain0 r(*this);
        for (int i = 0; i < size(); ++i) r.v[i] -= o.v[i];
        return r;
    }
};

// Exact rational function on oriented edges; the stored value is on the
// canonical arrow k+, the value on k- is its negation.
struct Cochain1 {
    std::vector<Rat> v;

    Cochain1() = default;
    explicit Cochain1(int m) : v(m) {}
    explicit Cochain1(std::vector<Rat> vals) : v(std::move(vals)) {}

    int size() const { return (int)v.size(); }
    Rat& operator[](int k) { return v[k]; }
    const Rat& operator[](int k) const { return v[k]; }

    // Value on the arrow over edge k pointing tail->head (forward=true) or
    // head->tail.
    Rat on(int k, bool forward) const { return forward ? v[k] : -v[k]; }

    bool operator==(const Cochain1& o) const { return v == o.v; }
    bool operator<(const Cochain1& o) const { return v < o.v; }
    Cochain1 operator+(const Cochain1& o) const {
        Cochain1 r(*this);
        for (int i = 0; i < size(); ++i) r.v[i] += o.v[i];
        return r;
    }
    Cochain1 operator-(const Cochain1& o) const {
        Cochain1 r(*this);
        for (int i = 0; i < size(); ++i) r.v[i] -= o.v[i];
        return r;
    }
    Cochain1 operator-() const {
        Cochain1 r(*this);
        for (auto& x : r.v) x = -x;
        return r;
    }
};

struct LengthFunction {
    std::vector<Int> ell;

    LengthFunction() = default;
    explicit LengthFunction(std::vector<Int> e) : ell(std::move(e)) {
        for (Int l : ell)
            if (l < 1) throw DomainError("edge lengths must be >= 1");
    }
    static LengthFunction ones(int m) {
        return LengthFunction(std::vector<Int>(m, 1));
    }
    Int operator[](int k) const { return ell[k]; }
    Int lcm_all() const {
        Int n = 1;
        for (Int l : ell) n = std::lcm(n, l);
        return n;
    }
};

// Integer twisting factor, one value per canonical arrow.
struct TwistC1 {
    std::vector<Int> m;

    TwistC1() = default;
    explicit TwistC1(std::vector<Int> vals) : m(std::move(vals)) {}
    static TwistC1 zero(int edge_count) {
        return TwistC1(std::vector<Int>(edge_count, 0));
    }
    Int on(int k, bool forward) const { return forward ? m[k] : -m[k]; }
};

// Connected components of the induced subgraph G[set] (optionally inside a
// spanning-subgraph edge mask), as membership-flag vectors.
inline std::vector<std::vector<char>> induced_component_flags(
    const Multigraph& g, const std::vector<char>& set,
    const std::vector<char>& edge_mask = {}) {
    const int n = g.vertex_count();
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
                if (!edge_mask.empty() && !edge_mask[k]) continue;
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
}

inline int induced_component_count(const Multigraph& g, const std::vector<char>& set,
                                   const std::vector<char>& edge_mask = {}) {
    return (int)induced_component_flags(g, set, edge_mask).size();
}

inline Rat inner0(const Cochain0& a, const Cochain0& b) {
    Rat s = 0;
    for (int i = 0; i < a.size(); ++i) s += a.v[i] * b.v[i];
    return s;
}

// <,> on C^1: one term per edge, evaluated on the canonical arrows.
inline Rat inner1(const Cochain1& a, const Cochain1& b) {
    Rat s = 0;
    for (int i = 0; i < a.size(); ++i) s += a.v[i] * b.v[i];
    return s;
}

}  // namespace cutvor

#endif
