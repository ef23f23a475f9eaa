#pragma once

// Independent decision procedures for the unital-product system
// { c >= 0, sum_i c[i][j][k] = delta_jk, sum_j c[i][j][k] = delta_ik }:
// an exact-LP feasibility/uniqueness analysis and, for tiny n, complete
// vertex enumeration over support subsets. Deliberately disjoint from the
// production propagation solver.

#include "amalg/ratlin.hpp"

#include <set>

namespace amalg::testsupport {

void marginal_system(int n, RatMat& a, RatVec& b);

struct MartignonOracle {
    bool feasible = false;
    bool unique = false;
    RatVec point;
};

// LP route: find a feasible point, then decide whether any nonzero kernel
// direction is admissible at it (a rank condition plus a cone LP).
MartignonOracle martignon_oracle(int n);

// Brute-force route, exponential in n^3: every support subset whose
// columns are independent yields at most one basic solution; the bounded
// polytope is the hull of the nonnegative ones. n <= 2.
std::set<RatVec> martignon_vertices(int n);

} // namespace amalg::testsupport
