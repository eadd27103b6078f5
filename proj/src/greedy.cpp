#include "wdf/greedy.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wdf {

GreedyState::GreedyState(Key n, bool keep_points)
    : n_(n), keep_points_(keep_points), last_(static_cast<std::size_t>(std::max<Key>(n, 1)), 0)
{
    if (n < 1) throw Error(Errc::BadN, "n = " + std::to_string(n));
}

void GreedyState::check_key(Key x) const
{
    if (x < 1 || x > n_)
        throw Error(Errc::KeyOutOfRange, "key " + std::to_string(x) + " not in [1, " + std::to_string(n_) + "]");
}

std::optional<Time> GreedyState::last_touched(Key k) const
{
    check_key(k);
    Time t = last_.get(static_cast<std::size_t>(k - 1));
    if (t == 0) return std::nullopt;
    return t;
}

std::vector<Key> GreedyState::row(Key x) const
{
    check_key(x);
    const auto pos = static_cast<std::ptrdiff_t>(x - 1);
    const Time own = last_.get(static_cast<std::size_t>(pos));
    std::vector<Key> left;
    for (auto [p, bar] = std::pair{pos - 1, own};;) {
        p = last_.last_above(p, bar);
        if (p == last_.npos) break;
        left.push_back(static_cast<Key>(p + 1));
        bar = last_.get(static_cast<std::size_t>(p));
        --p;
    }
    std::vector<Key> out(left.rbegin(), left.rend());
    out.push_back(x);
    for (auto [p, bar] = std::pair{pos + 1, own};;) {
        p = last_.first_above(p, bar);
        if (p == last_.npos) break;
        out.push_back(static_cast<Key>(p + 1));
        bar = last_.get(static_cast<std::size_t>(p));
        ++p;
    }
    return out;
}

std::vector<Key> GreedyState::row_naive(Key x) const
{
    check_key(x);
    auto last = [&](Key k) { return last_.get(static_cast<std::size_t>(k - 1)); };
    std::vector<Key> out;
    Time bar = last(x);
    for (Key y = x - 1; y >= 1; --y) {
        if (last(y) > bar) {
            out.push_back(y);
            bar = last(y);
        }
    }
    std::reverse(out.begin(), out.end());
    out.push_back(x);
    bar = last(x);
    for (Key y = x + 1; y <= n_; ++y) {
        if (last(y) > bar) {
            out.push_back(y);
            bar = last(y);
        }
    }
    return out;
}

const std::vector<Key>& GreedyState::access(Key x)
{
    scratch_ = row(x);
    ++now_;
    for (Key y : scratch_) {
        last_.set(static_cast<std::size_t>(y - 1), now_);
        if (keep_points_) emitted_.insert({y, now_});
    }
    per_row_cost_.push_back(static_cast<std::int64_t>(scratch_.size()));
    return scratch_;
}

std::vector<Key> greedy_row(const GreedyState& state, Key x)
{
    return state.row(x);
}

GreedyResult greedy_execute(const AccessSequence& seq, bool keep_points)
{
    GreedyState state(seq.n(), keep_points);
    for (Key x : seq.accesses()) state.access(x);
    return {state.emitted(), CostReport::from(state.per_row_cost())};
}

namespace {

bool rectangle_has_third(const std::vector<Point>& pts, Point p, Point q)
{
    const Key klo = std::min(p.key, q.key), khi = std::max(p.key, q.key);
    const Time tlo = std::min(p.time, q.time), thi = std::max(p.time, q.time);
    for (Point r : pts) {
        if (r == p || r == q) continue;
        if (r.key >= klo && r.key <= khi && r.time >= tlo && r.time <= thi) return true;
    }
    return false;
}

// Earlier rows are satisfied among themselves and extra points only add
// witnesses, so only pairs touching the new row can fail.
bool row_is_feasible(const std::vector<Point>& base, const std::vector<Key>& row, Time t)
{
    std::vector<Point> all(base);
    for (Key y : row) all.push_back({y, t});
    for (Key y : row) {
        const Point q{y, t};
        for (Point p : base) {
            if (p.key == q.key || p.time == q.time) continue;
            if (!rectangle_has_third(all, p, q)) return false;
        }
    }
    return true;
}

} // namespace

std::vector<std::vector<Key>> brute_min_rows(const PointSet& points, Key x, Time t, Key n)
{
    if (n < 1) throw Error(Errc::BadN, "n = " + std::to_string(n));
    if (n > 20) throw Error(Errc::TooLarge, "exhaustive row search needs n <= 20");
    if (x < 1 || x > n) throw Error(Errc::KeyOutOfRange, "key " + std::to_string(x));
    const std::vector<Point> base = points.points();

    std::vector<std::vector<Key>> found;
    for (Key size = 1; size <= n && found.empty(); ++size) {
        // k-combinations of 1..n in lexicographic order, keeping those with x.
        std::vector<Key> comb(static_cast<std::size_t>(size));
        for (Key i = 0; i < size; ++i) comb[static_cast<std::size_t>(i)] = i + 1;
        while (true) {
            if (std::binary_search(comb.begin(), comb.end(), x) && row_is_feasible(base, comb, t))
                found.push_back(comb);
            Key i = size - 1;
            while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - size + i + 1) --i;
            if (i < 0) break;
            ++comb[static_cast<std::size_t>(i)];
            for (Key j = i + 1; j < size; ++j)
                comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    // The full row {1..n} is always feasible.
    if (found.empty()) throw std::logic_error("brute_min_rows: no feasible row");
    return found;
}

std::vector<Key> brute_min_row(const PointSet& points, Key x, Time t, Key n)
{
    return brute_min_rows(points, x, t, n).front();
}

} // namespace wdf
