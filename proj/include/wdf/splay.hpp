#pragma once

// Bottom-up splay tree over keys 1..n, instrumented with the number of nodes
// on each search path.

#include <cstdint>
#include <vector>

#include "wdf/bounds.hpp"
#include "wdf/core.hpp"

namespace wdf {

enum class InitialShape { Balanced, LeftSpine, RightSpine };

class SplayTree {
public:
    explicit SplayTree(const StaticTree& shape);
    static SplayTree make(Key n, InitialShape shape);

    Key n() const noexcept { return static_cast<Key>(left_.size()) - 1; }
    Key root() const noexcept { return root_; }
    Key left(Key k) const { return left_.at(static_cast<std::size_t>(k)); }
    Key right(Key k) const { return right_.at(static_cast<std::size_t>(k)); }
    Key parent(Key k) const { return parent_.at(static_cast<std::size_t>(k)); }

    /// Returns depth(x) + 1 measured before restructuring, then splays x to
    /// the root with zig / zig-zig / zig-zag steps.
    std::int64_t access(Key x);

    std::int64_t rotations() const noexcept { return rotations_; }
    int depth(Key x) const;
    std::vector<Key> in_order() const;

private:
    void rotate_up(Key x);
    Key& child_slot(Key p, Key c);

    Key root_;
    std::vector<Key> left_, right_, parent_;
    std::int64_t rotations_ = 0;
};

std::int64_t splay_access(SplayTree& tree, Key x);

CostReport run_splay(const AccessSequence& seq, InitialShape initial = InitialShape::Balanced);

/// Independent recursive implementation over owned nodes, used to
/// cross-check run_splay.
CostReport run_splay_reference(const AccessSequence& seq, InitialShape initial = InitialShape::Balanced);

StaticTree initial_tree(Key n, InitialShape shape);

} // namespace wdf
