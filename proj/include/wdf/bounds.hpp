#pragma once

// Weighted dynamic finger bound and the static finger trees it is
// equivalent to.
//
// For consecutive accesses a = s_{i-1}, b = s_i the per-access term is
//
//     1 + log2( sum_{min(a,b) <= x <= max(a,b)} w_x / min(w_a, w_b) )
//
// which is at least 1 because the numerator contains both endpoint weights.
// With all weights equal it reduces to 1 + log2(|b - a| + 1).

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "wdf/core.hpp"

namespace wdf {

/// A fixed BST shape over keys 1..n. Links use 0 for "none".
class StaticTree {
public:
    /// Validates that the links form a single BST whose in-order traversal
    /// is 1..n. `left`/`right` are indexed by key (entry 0 unused).
    StaticTree(Key root, std::vector<Key> left, std::vector<Key> right);

    static StaticTree balanced(Key n);
    /// Root n, every node the left child of its successor.
    static StaticTree left_spine(Key n);
    /// Root 1, every node the right child of its predecessor.
    static StaticTree right_spine(Key n);

    Key n() const noexcept { return static_cast<Key>(left_.size()) - 1; }
    Key root() const noexcept { return root_; }
    Key left(Key k) const { return left_.at(static_cast<std::size_t>(k)); }
    Key right(Key k) const { return right_.at(static_cast<std::size_t>(k)); }
    Key parent(Key k) const { return parent_.at(static_cast<std::size_t>(k)); }
    int depth(Key k) const { return depth_.at(static_cast<std::size_t>(k)); }

    Key lca(Key a, Key b) const;
    /// Nodes on the tree path from a to b, both ends included.
    int path_nodes(Key a, Key b) const;

    std::vector<Key> in_order() const;

    friend bool operator==(const StaticTree& a, const StaticTree& b)
    {
        return a.root_ == b.root_ && a.left_ == b.left_ && a.right_ == b.right_;
    }

private:
    Key root_;
    std::vector<Key> left_, right_, parent_;
    std::vector<int> depth_;
};

enum class StartMode { Self, Root };

struct BoundReport {
    std::vector<double> per_access;
    double total = 0.0;
};

double wdf_term(const WeightAssignment& w, Key prev, Key cur);

/// Per-access terms for the whole sequence. The first access costs 1 with
/// StartMode::Self (s_0 := s_1) and 1 + log2(W / w_{s_1}) with
/// StartMode::Root. Throws DimensionMismatch if w and seq disagree on n.
BoundReport weighted_df_bound(const AccessSequence& seq, const WeightAssignment& w,
                              StartMode start = StartMode::Self);

/// Equal-weights specialization: terms 1 + log2(|s_i - s_{i-1}| + 1).
BoundReport dynamic_finger_bound(const AccessSequence& seq);

/// Nodes walked when each search starts at the previous target; the first
/// search starts at the root.
CostReport static_finger_cost(const StaticTree& tree, const AccessSequence& seq);

/// w_i = base^(-depth(i)). Throws BadBase unless base > 1.
WeightAssignment weights_from_tree(const StaticTree& tree, double base = 2.0);

/// Weighted-median tree: the root of the subtree over [a, b] is the smallest
/// r with range_weight(a, r) >= range_weight(a, b) / 2. Every key then
/// satisfies depth(i) <= log2(W / w_i) + 1.
StaticTree tree_from_weights(const WeightAssignment& w);

inline constexpr Key kBestStaticMaxKeys = 12;

/// Calls `visit` once for every BST shape over 1..n (Catalan(n) shapes).
void for_each_bst(Key n, const std::function<void(const StaticTree&)>& visit);

/// Exhaustive search over all BSTs for the cheapest static finger tree.
/// Throws TooLarge for n > 12.
std::pair<StaticTree, std::int64_t> best_static_finger_cost(const AccessSequence& seq);

} // namespace wdf
