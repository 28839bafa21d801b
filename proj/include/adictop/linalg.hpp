#pragma once

#include <optional>
#include <vector>

#include "adictop/numbers.hpp"

namespace adictop {

using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;

// Row rank by Gaussian elimination over Q.
long rank(RatMatrix m);

// Is v in the span of the given vectors (all of the same length)?
bool in_span(const std::vector<RatVector>& spanning, const RatVector& v);

// One exact solution of A x = b, or nullopt when the system is infeasible.
// Free variables are set to 0, so a unique solution is returned verbatim.
std::optional<RatVector> solve_linear(RatMatrix a, RatVector b);

// True when A x = b has no solution (rank test on the augmented matrix).
bool linear_infeasible(const RatMatrix& a, const RatVector& b);

}  // namespace adictop
