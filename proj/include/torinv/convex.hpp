#pragma once

#include "torinv/types.hpp"

#include <optional>

namespace torinv {

// Point sets are passed as matrices whose columns are the points, so the
// ambient dimension survives an empty point set.

/// Convex combination `sum coefficients[k] * points.col(indices[k]) == target`.
struct ConvexCombination {
    std::vector<Eigen::Index> indices;
    std::vector<Rational> coefficients;
};

/// Exact LP feasibility; conv of the empty set is empty.
bool in_convex_hull(const RatMatrix& points, const RatVector& target);

/// True iff target is a strictly positive convex combination of all points.
bool in_relative_interior(const RatMatrix& points, const RatVector& target);

/// Convex combination over an affinely independent subset of the points.
/// Throws NotInHull when the target lies outside the hull.
ConvexCombination caratheodory(const RatMatrix& points, const RatVector& target);

/// Integer δ with δ·p > 0 for every column p, or nullopt iff 0 ∈ conv(points).
std::optional<IntVector> separating_functional(const RatMatrix& points);

/// Dimension of the affine span of the columns (-1 for no points).
Eigen::Index affine_dimension(const RatMatrix& points);

/// A nonzero rational vector in the right null space of `M`, if any.
std::optional<RatVector> null_vector(const RatMatrix& M);

/// Rank over Q.
Eigen::Index rational_rank(const RatMatrix& M);

inline RatMatrix to_rational(const IntMatrix& m) { return m.cast<Rational>(); }
inline RatVector to_rational(const IntVector& v) { return v.cast<Rational>(); }

} // namespace torinv
