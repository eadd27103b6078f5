#pragma once

// Arboral satisfaction: a point set is satisfied when every closed
// axis-aligned rectangle spanned by two of its points with distinct keys and
// distinct times holds a third point of the set (boundary included, the two
// corners excluded).

#include <utility>
#include <vector>

#include "wdf/core.hpp"

namespace wdf {

/// Sweep-line check in O(|P| log |P|).
///
/// Rows are processed in time order while a range-max index keeps, for every
/// key, the latest time seen strictly below the current row. A point q on
/// row t has an empty rectangle with some earlier point iff one of the key
/// gaps next to q on row t holds a column whose latest time exceeds the
/// latest time in q's own column.
bool is_arborally_satisfied(const PointSet& points);

/// Every unordered pair violating satisfaction, pairs ordered
/// lexicographically with points compared by (time, key). Quadratic: each
/// pair is checked with range queries on the row index.
std::vector<std::pair<Point, Point>> unsatisfied_pairs(const PointSet& points);

/// Pairwise reference check; agrees with is_arborally_satisfied.
bool is_arborally_satisfied_naive(const PointSet& points);

} // namespace wdf
