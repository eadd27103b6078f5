#include "wdf/splay.hpp"

#include <memory>
#include <string>

namespace wdf {

StaticTree initial_tree(Key n, InitialShape shape)
{
    switch (shape) {
    case InitialShape::LeftSpine: return StaticTree::left_spine(n);
    case InitialShape::RightSpine: return StaticTree::right_spine(n);
    case InitialShape::Balanced: break;
    }
    return StaticTree::balanced(n);
}

SplayTree::SplayTree(const StaticTree& shape) : root_(shape.root())
{
    const auto size = static_cast<std::size_t>(shape.n()) + 1;
    left_.assign(size, 0);
    right_.assign(size, 0);
    parent_.assign(size, 0);
    for (Key k = 1; k <= shape.n(); ++k) {
        left_[static_cast<std::size_t>(k)] = shape.left(k);
        right_[static_cast<std::size_t>(k)] = shape.right(k);
        parent_[static_cast<std::size_t>(k)] = shape.parent(k);
    }
}

SplayTree SplayTree::make(Key n, InitialShape shape)
{
    return SplayTree(initial_tree(n, shape));
}

Key& SplayTree::child_slot(Key p, Key c)
{
    return left_[static_cast<std::size_t>(p)] == c ? left_[static_cast<std::size_t>(p)]
                                                   : right_[static_cast<std::size_t>(p)];
}

// Single rotation lifting x over its parent.
void SplayTree::rotate_up(Key x)
{
    const auto xi = static_cast<std::size_t>(x);
    const Key p = parent_[xi];
    const auto pi = static_cast<std::size_t>(p);
    const Key g = parent_[pi];

    if (left_[pi] == x) {
        const Key b = right_[xi];
        left_[pi] = b;
        if (b) parent_[static_cast<std::size_t>(b)] = p;
        right_[xi] = p;
    } else {
        const Key b = left_[xi];
        right_[pi] = b;
        if (b) parent_[static_cast<std::size_t>(b)] = p;
        left_[xi] = p;
    }
    parent_[pi] = x;
    parent_[xi] = g;
    if (g) child_slot(g, p) = x;
    else root_ = x;
    ++rotations_;
}

int SplayTree::depth(Key x) const
{
    int d = 0;
    for (Key k = x; parent(k) != 0; k = parent(k)) ++d;
    return d;
}

std::int64_t SplayTree::access(Key x)
{
    if (x < 1 || x > n()) throw Error(Errc::KeyOutOfRange, "key " + std::to_string(x));
    const std::int64_t cost = depth(x) + 1;
    while (parent(x) != 0) {
        const Key p = parent(x);
        const Key g = parent(p);
        if (g == 0) {
            rotate_up(x); // zig
        } else if ((left(g) == p) == (left(p) == x)) {
            rotate_up(p); // zig-zig
            rotate_up(x);
        } else {
            rotate_up(x); // zig-zag
            rotate_up(x);
        }
    }
    return cost;
}

std::vector<Key> SplayTree::in_order() const
{
    std::vector<Key> out, stack;
    Key cur = root_;
    while (cur != 0 || !stack.empty()) {
        while (cur != 0) {
            stack.push_back(cur);
            cur = left(cur);
        }
        cur = stack.back();
        stack.pop_back();
        out.push_back(cur);
        cur = right(cur);
    }
    return out;
}

std::int64_t splay_access(SplayTree& tree, Key x)
{
    return tree.access(x);
}

CostReport run_splay(const AccessSequence& seq, InitialShape initial)
{
    SplayTree tree = SplayTree::make(seq.n(), initial);
    std::vector<std::int64_t> costs;
    costs.reserve(seq.size());
    for (Key x : seq.accesses()) costs.push_back(tree.access(x));
    return CostReport::from(std::move(costs));
}

namespace {

struct Node {
    Key key;
    std::unique_ptr<Node> left, right;
};

using Owned = std::unique_ptr<Node>;

Owned build(const StaticTree& shape, Key k)
{
    if (k == 0) return nullptr;
    return std::make_unique<Node>(Node{k, build(shape, shape.left(k)), build(shape, shape.right(k))});
}

Owned rotate_right(Owned n)
{
    Owned l = std::move(n->left);
    n->left = std::move(l->right);
    l->right = std::move(n);
    return l;
}

Owned rotate_left(Owned n)
{
    Owned r = std::move(n->right);
    n->right = std::move(r->left);
    r->left = std::move(n);
    return r;
}

int depth_of(const Node* n, Key key)
{
    int d = 0;
    while (n->key != key) {
        n = key < n->key ? n->left.get() : n->right.get();
        ++d;
    }
    return d;
}

// Brings `key`, which sits at even depth below n, to the top two levels at a
// time; the deepest pair is resolved first, matching bottom-up splaying.
Owned splay_even(Owned n, Key key)
{
    if (n->key == key) return n;
    const bool go_left = key < n->key;
    Node* child = go_left ? n->left.get() : n->right.get();
    const bool child_left = key < child->key;
    Owned& grand = child_left ? child->left : child->right;
    grand = splay_even(std::move(grand), key);
    if (go_left && child_left) {
        n = rotate_right(std::move(n));
        return rotate_right(std::move(n));
    }
    if (!go_left && !child_left) {
        n = rotate_left(std::move(n));
        return rotate_left(std::move(n));
    }
    if (go_left) {
        n->left = rotate_left(std::move(n->left));
        return rotate_right(std::move(n));
    }
    n->right = rotate_right(std::move(n->right));
    return rotate_left(std::move(n));
}

Owned splay(Owned root, Key key)
{
    if (depth_of(root.get(), key) % 2 == 0) return splay_even(std::move(root), key);
    const bool go_left = key < root->key;
    Owned& child = go_left ? root->left : root->right;
    child = splay_even(std::move(child), key);
    return go_left ? rotate_right(std::move(root)) : rotate_left(std::move(root));
}

} // namespace

CostReport run_splay_reference(const AccessSequence& seq, InitialShape initial)
{
    const StaticTree shape = initial_tree(seq.n(), initial);
    Owned root = build(shape, shape.root());
    std::vector<std::int64_t> costs;
    costs.reserve(seq.size());
    for (Key x : seq.accesses()) {
        costs.push_back(depth_of(root.get(), x) + 1);
        root = splay(std::move(root), x);
    }
    return CostReport::from(std::move(costs));
}

} // namespace wdf
