#ifndef CUTVOR_LATTICE_HPP
#define CUTVOR_LATTICE_HPP

#include "graph.hpp"
#include "linalg.hpp"

namespace cutvor {

// Conventions, fixed once for the whole library: the canonical arrow of
// edge k runs tail(k) -> head(k), and
//   d(f)(e)    = f(head) - f(tail)
//   (d* mu)(v) = sum of mu over arrows with head v
//   Delta      = d* d   (positive semidefinite, rows sum to zero).

Cochain1 coboundary(const Multigraph& g, const Cochain0& f);
Cochain0 adjoint(const Multigraph& g, const Cochain1& mu);
Cochain0 laplacian_apply(const Multigraph& g, const Cochain0& f);

// d(chi_C) for a vertex subset given as membership flags.
Cochain1 cut_cochain(const Multigraph& g, const std::vector<char>& in_c);

// Number of spanning trees = det of the reduced Laplacian, exactly.
BigInt spanning_tree_count(const Multigraph& g);

// mu in F_R = Im(d)?  Checked against a fundamental cycle basis.
bool is_in_cut_space(const Multigraph& g, const Cochain1& mu);

// Solve Delta f = h exactly with f(0) = 0; h must have coordinate sum 0.
Cochain0 laplacian_solve(const Multigraph& g, const Cochain0& h);

// q(h) = <f, h> for any f with Delta f = h; requires sum h = 0.
Rat quadratic_form_q(const Multigraph& g, const Cochain0& h);

// Integrate mu in F_R to f with d(f) = mu, f(0) = 0.  Requires mu in F_R.
Cochain0 integrate_cut(const Multigraph& g, const Cochain1& mu);

}  // namespace cutvor

#endif
