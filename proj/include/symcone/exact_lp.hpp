#pragma once

// Exact feasibility for small linear programs.

#include <optional>
#include <vector>

#include "symcone/rational.hpp"

namespace symcone {

/// A point of {x >= 0 : a x = b}, or nullopt if the set is empty. Phase one
/// of the simplex method with Bland's rule, so it always terminates.
std::optional<VectorXq> feasible_point(const MatrixXq& a, const VectorXq& b);

/// Whether p is a convex combination of the given points.
bool in_convex_hull(const std::vector<VectorXq>& points, const VectorXq& p);

}  // namespace symcone
