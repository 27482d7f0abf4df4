#ifndef CUTVOR_LINALG_HPP
#define CUTVOR_LINALG_HPP

#include "rational.hpp"

#include <optional>
#include <vector>

namespace cutvor {

using IMat = std::vector<std::vector<BigInt>>;
using RMat = std::vector<std::vector<Rat>>;

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det_bareiss(IMat a);

struct SolveOutcome {
    bool consistent = false;
    int rank = 0;
    bool unique = false;       // rank == #unknowns
    std::vector<Rat> x;        // a solution (free unknowns set to 0)
};

// Solve A x = b exactly over the rationals.  Denominators are cleared per
// row, the elimination itself is fraction-free over integers.
SolveOutcome solve_system(const RMat& a, const std::vector<Rat>& b);

int rank_of(const RMat& a);

}  // namespace cutvor

#endif
