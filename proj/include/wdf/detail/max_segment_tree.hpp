#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace wdf::detail {

// Point-update / range-max tree over positions 0..size-1 with descents that
// locate the nearest position on either side holding a value above a
// threshold. Values start at `floor`.
template <typename T>
class MaxSegmentTree {
public:
    static constexpr std::ptrdiff_t npos = -1;

    explicit MaxSegmentTree(std::size_t size, T floor = T{}) : size_(size), floor_(floor)
    {
        leaves_ = 1;
        while (leaves_ < std::max<std::size_t>(size_, 1)) leaves_ <<= 1;
        tree_.assign(2 * leaves_, floor_);
    }

    std::size_t size() const noexcept { return size_; }

    T get(std::size_t i) const { return tree_[leaves_ + i]; }

    void set(std::size_t i, T value)
    {
        std::size_t node = leaves_ + i;
        tree_[node] = value;
        for (node >>= 1; node >= 1; node >>= 1) tree_[node] = std::max(tree_[2 * node], tree_[2 * node + 1]);
    }

    // Max over [lo, hi], or floor for an empty range.
    T range_max(std::ptrdiff_t lo, std::ptrdiff_t hi) const
    {
        T best = floor_;
        if (lo > hi) return best;
        std::size_t l = leaves_ + static_cast<std::size_t>(lo);
        std::size_t r = leaves_ + static_cast<std::size_t>(hi) + 1;
        while (l < r) {
            if (l & 1) best = std::max(best, tree_[l++]);
            if (r & 1) best = std::max(best, tree_[--r]);
            l >>= 1;
            r >>= 1;
        }
        return best;
    }

    // Smallest position >= from whose value exceeds v.
    std::ptrdiff_t first_above(std::ptrdiff_t from, T v) const
    {
        if (from < 0) from = 0;
        if (static_cast<std::size_t>(from) >= size_) return npos;
        return first_above(1, 0, leaves_ - 1, static_cast<std::size_t>(from), v);
    }

    // Largest position <= upto whose value exceeds v.
    std::ptrdiff_t last_above(std::ptrdiff_t upto, T v) const
    {
        if (upto < 0) return npos;
        if (static_cast<std::size_t>(upto) >= size_) upto = static_cast<std::ptrdiff_t>(size_) - 1;
        return last_above(1, 0, leaves_ - 1, static_cast<std::size_t>(upto), v);
    }

private:
    std::ptrdiff_t first_above(std::size_t node, std::size_t lo, std::size_t hi, std::size_t from, T v) const
    {
        if (hi < from || !(tree_[node] > v)) return npos;
        if (lo == hi) return static_cast<std::ptrdiff_t>(lo);
        std::size_t mid = (lo + hi) / 2;
        auto r = first_above(2 * node, lo, mid, from, v);
        if (r != npos) return r;
        return first_above(2 * node + 1, mid + 1, hi, from, v);
    }

    std::ptrdiff_t last_above(std::size_t node, std::size_t lo, std::size_t hi, std::size_t upto, T v) const
    {
        if (lo > upto || !(tree_[node] > v)) return npos;
        if (lo == hi) return static_cast<std::ptrdiff_t>(lo);
        std::size_t mid = (lo + hi) / 2;
        auto r = last_above(2 * node + 1, mid + 1, hi, upto, v);
        if (r != npos) return r;
        return last_above(2 * node, lo, mid, upto, v);
    }

    std::size_t size_;
    std::size_t leaves_;
    T floor_;
    std::vector<T> tree_;
};

} // namespace wdf::detail
