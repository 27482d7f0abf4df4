#ifndef CUTVOR_TEST_SUPPORT_HPP
#define CUTVOR_TEST_SUPPORT_HPP

#include "divisors.hpp"
#include "tiling.hpp"

#include <random>

namespace cutvor::testsupport {

Multigraph k3();
Multigraph p3();      // path 0-1-2
Multigraph c4();      // 4-cycle
Multigraph k4();
Multigraph theta3();  // two vertices, three parallel edges

// Connected loopless multigraph with |V| in [min_v, max_v], |E| <= max_e.
Multigraph random_connected_multigraph(std::mt19937_64& rng, int min_v, int max_v,
                                       int max_e);

std::vector<Int> random_fn(std::mt19937_64& rng, int n, Int lo, Int hi);

// Oracle: count spanning trees by enumerating edge subsets of size |V|-1.
BigInt count_spanning_trees_brute(const Multigraph& g);

// Oracle: d* as an explicit incidence matrix product.
Cochain0 adjoint_by_matrix(const Multigraph& g, const Cochain1& mu);

// Oracle: solve A x = b by plain rational Gauss-Jordan (independent of the
// library's fraction-free path); square systems only.
std::vector<Rat> gauss_solve(std::vector<std::vector<Rat>> a, std::vector<Rat> b);

}  // namespace cutvor::testsupport

#endif
