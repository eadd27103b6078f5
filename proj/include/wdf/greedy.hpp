#pragma once

// Geometric greedy (GreedyASS): sweep the access rows in time order and, on
// each row, add exactly the points needed to keep the set arborally
// satisfied. The cost of an access is the number of points on its row.

#include <optional>
#include <vector>

#include "wdf/core.hpp"
#include "wdf/detail/max_segment_tree.hpp"

namespace wdf {

class GreedyState {
public:
    explicit GreedyState(Key n, bool keep_points = true);

    Key n() const noexcept { return n_; }
    // Rows processed so far.
    Time now() const noexcept { return now_; }
    std::optional<Time> last_touched(Key k) const;

    /// Keys touched if x were accessed on the next row. Walks the two
    /// staircases of strict running maxima of last-touched time outward from
    /// x, seeded with x's own last-touched time. O(|T| log n).
    std::vector<Key> row(Key x) const;

    /// Same result by a linear scan over all keys.
    std::vector<Key> row_naive(Key x) const;

    /// Processes the next access and returns the touched keys (sorted).
    const std::vector<Key>& access(Key x);

    const PointSet& emitted() const noexcept { return emitted_; }
    const std::vector<std::int64_t>& per_row_cost() const noexcept { return per_row_cost_; }

private:
    void check_key(Key x) const;

    Key n_;
    bool keep_points_;
    Time now_ = 0;
    detail::MaxSegmentTree<Time> last_; // position k-1 holds last_touched(k), 0 = never
    PointSet emitted_;
    std::vector<std::int64_t> per_row_cost_;
    std::vector<Key> scratch_;
};

std::vector<Key> greedy_row(const GreedyState& state, Key x);

struct GreedyResult {
    PointSet points; // empty when points were not kept
    CostReport cost;
};

GreedyResult greedy_execute(const AccessSequence& seq, bool keep_points = true);

/// Exhaustive oracle: the first key set R containing x, in order of
/// increasing size and then lexicographically, such that
/// points + {(y, t) : y in R} is arborally satisfied. Expects a satisfied
/// `points` with all times below t. Throws TooLarge for n > 20.
std::vector<Key> brute_min_row(const PointSet& points, Key x, Time t, Key n);

/// All feasible rows of minimum size, in lexicographic order.
std::vector<std::vector<Key>> brute_min_rows(const PointSet& points, Key x, Time t, Key n);

} // namespace wdf
