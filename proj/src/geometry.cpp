#include "wdf/geometry.hpp"

#include <algorithm>

#include "wdf/detail/max_segment_tree.hpp"

namespace wdf {

bool is_arborally_satisfied(const PointSet& points)
{
    if (points.size() < 2) return true;

    std::vector<Key> keys;
    keys.reserve(points.columns().size());
    for (const auto& entry : points.columns()) keys.push_back(entry.first);
    const auto width = static_cast<std::ptrdiff_t>(keys.size());

    // Latest time per column among rows already swept; 0 = none yet.
    detail::MaxSegmentTree<Time> latest(keys.size(), 0);
    std::vector<std::ptrdiff_t> cols;

    for (const auto& [t, row] : points.rows()) {
        cols.clear();
        for (Key k : row)
            cols.push_back(std::lower_bound(keys.begin(), keys.end(), k) - keys.begin());

        for (std::size_t j = 0; j < cols.size(); ++j) {
            const Time own = latest.get(static_cast<std::size_t>(cols[j]));
            const std::ptrdiff_t left_lo = j == 0 ? 0 : cols[j - 1] + 1;
            const std::ptrdiff_t right_hi = j + 1 == cols.size() ? width - 1 : cols[j + 1] - 1;
            if (latest.range_max(left_lo, cols[j] - 1) > own) return false;
            if (latest.range_max(cols[j] + 1, right_hi) > own) return false;
        }
        for (auto c : cols) latest.set(static_cast<std::size_t>(c), t);
    }
    return true;
}

namespace {

// Points of the set inside [klo,khi] x [tlo,thi], counting stops at `cap`.
std::size_t count_in_rectangle(const PointSet& points, Key klo, Key khi, Time tlo, Time thi, std::size_t cap)
{
    std::size_t count = 0;
    const auto& rows = points.rows();
    for (auto it = rows.lower_bound(tlo); it != rows.end() && it->first <= thi; ++it) {
        const auto& row = it->second;
        count += static_cast<std::size_t>(std::upper_bound(row.begin(), row.end(), khi) -
                                          std::lower_bound(row.begin(), row.end(), klo));
        if (count >= cap) break;
    }
    return count;
}

template <typename OnViolation>
void scan_pairs(const PointSet& points, OnViolation&& on_violation)
{
    const std::vector<Point> pts = points.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Point p = pts[i];
            const Point q = pts[j];
            if (p.key == q.key || p.time == q.time) continue;
            const Key klo = std::min(p.key, q.key);
            const Key khi = std::max(p.key, q.key);
            if (count_in_rectangle(points, klo, khi, p.time, q.time, 3) < 3) {
                if (!on_violation(p, q)) return;
            }
        }
    }
}

} // namespace

std::vector<std::pair<Point, Point>> unsatisfied_pairs(const PointSet& points)
{
    std::vector<std::pair<Point, Point>> out;
    scan_pairs(points, [&](Point p, Point q) {
        out.emplace_back(p, q);
        return true;
    });
    return out;
}

bool is_arborally_satisfied_naive(const PointSet& points)
{
    bool ok = true;
    scan_pairs(points, [&](Point, Point) {
        ok = false;
        return false;
    });
    return ok;
}

} // namespace wdf
