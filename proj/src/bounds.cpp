#include "wdf/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

namespace wdf {

namespace {

struct Interval {
    Key lo, hi;
    Key parent;
    bool as_left;
};

std::string n_text(Key n) { return "n = " + std::to_string(n); }

} // namespace

StaticTree::StaticTree(Key root, std::vector<Key> left, std::vector<Key> right)
    : root_(root), left_(std::move(left)), right_(std::move(right))
{
    if (left_.size() != right_.size() || left_.size() < 2)
        throw Error(Errc::DimensionMismatch, "link vectors must both have n + 1 entries, n >= 1");
    const Key n = this->n();
    if (root_ < 1 || root_ > n) throw Error(Errc::KeyOutOfRange, "root " + std::to_string(root_));

    parent_.assign(left_.size(), 0);
    depth_.assign(left_.size(), -1);
    std::vector<Key> stack{root_};
    depth_[static_cast<std::size_t>(root_)] = 0;
    std::size_t seen = 0;
    while (!stack.empty()) {
        const Key k = stack.back();
        stack.pop_back();
        ++seen;
        for (Key child : {left_[static_cast<std::size_t>(k)], right_[static_cast<std::size_t>(k)]}) {
            if (child == 0) continue;
            if (child < 1 || child > n || depth_[static_cast<std::size_t>(child)] != -1)
                throw Error(Errc::KeyOutOfRange, "malformed tree at key " + std::to_string(child));
            parent_[static_cast<std::size_t>(child)] = k;
            depth_[static_cast<std::size_t>(child)] = depth_[static_cast<std::size_t>(k)] + 1;
            stack.push_back(child);
        }
    }
    if (seen != static_cast<std::size_t>(n)) throw Error(Errc::DimensionMismatch, "tree does not span 1..n");
    const auto order = in_order();
    for (Key i = 1; i <= n; ++i)
        if (order[static_cast<std::size_t>(i - 1)] != i)
            throw Error(Errc::KeyOutOfRange, "in-order traversal is not 1..n");
}

StaticTree StaticTree::balanced(Key n)
{
    if (n < 1) throw Error(Errc::BadN, n_text(n));
    std::vector<Key> left(static_cast<std::size_t>(n) + 1, 0), right(left);
    Key root = 0;
    std::vector<Interval> todo{{1, n, 0, false}};
    while (!todo.empty()) {
        const Interval iv = todo.back();
        todo.pop_back();
        if (iv.lo > iv.hi) continue;
        const Key mid = iv.lo + (iv.hi - iv.lo) / 2;
        if (iv.parent == 0) root = mid;
        else (iv.as_left ? left : right)[static_cast<std::size_t>(iv.parent)] = mid;
        todo.push_back({iv.lo, mid - 1, mid, true});
        todo.push_back({mid + 1, iv.hi, mid, false});
    }
    return StaticTree(root, std::move(left), std::move(right));
}

StaticTree StaticTree::left_spine(Key n)
{
    if (n < 1) throw Error(Errc::BadN, n_text(n));
    std::vector<Key> left(static_cast<std::size_t>(n) + 1, 0), right(left);
    for (Key k = 2; k <= n; ++k) left[static_cast<std::size_t>(k)] = k - 1;
    return StaticTree(n, std::move(left), std::move(right));
}

StaticTree StaticTree::right_spine(Key n)
{
    if (n < 1) throw Error(Errc::BadN, n_text(n));
    std::vector<Key> left(static_cast<std::size_t>(n) + 1, 0), right(left);
    for (Key k = 1; k < n; ++k) right[static_cast<std::size_t>(k)] = k + 1;
    return StaticTree(1, std::move(left), std::move(right));
}

Key StaticTree::lca(Key a, Key b) const
{
    while (depth(a) > depth(b)) a = parent(a);
    while (depth(b) > depth(a)) b = parent(b);
    while (a != b) {
        a = parent(a);
        b = parent(b);
    }
    return a;
}

int StaticTree::path_nodes(Key a, Key b) const
{
    return depth(a) + depth(b) - 2 * depth(lca(a, b)) + 1;
}

std::vector<Key> StaticTree::in_order() const
{
    std::vector<Key> out, stack;
    out.reserve(left_.size() - 1);
    Key cur = root_;
    while (cur != 0 || !stack.empty()) {
        while (cur != 0) {
            if (stack.size() >= left_.size()) return out; // cycle guard
            stack.push_back(cur);
            cur = left_[static_cast<std::size_t>(cur)];
        }
        cur = stack.back();
        stack.pop_back();
        out.push_back(cur);
        cur = right_[static_cast<std::size_t>(cur)];
    }
    return out;
}

double wdf_term(const WeightAssignment& w, Key prev, Key cur)
{
    const double span = range_weight(w, prev, cur);
    const double lighter = std::min(w.weight(prev), w.weight(cur));
    return 1.0 + std::log2(std::max(span / lighter, 1.0));
}

BoundReport weighted_df_bound(const AccessSequence& seq, const WeightAssignment& w, StartMode start)
{
    if (w.n() != seq.n())
        throw Error(Errc::DimensionMismatch,
                    "weights cover " + std::to_string(w.n()) + " keys, sequence has " + n_text(seq.n()));
    BoundReport report;
    report.per_access.reserve(seq.size());
    const Key first = seq[0];
    report.per_access.push_back(start == StartMode::Self ? 1.0
                                                         : 1.0 + std::log2(std::max(w.total() / w.weight(first), 1.0)));
    for (std::size_t i = 1; i < seq.size(); ++i) report.per_access.push_back(wdf_term(w, seq[i - 1], seq[i]));
    for (double t : report.per_access) report.total += t;
    return report;
}

BoundReport dynamic_finger_bound(const AccessSequence& seq)
{
    return weighted_df_bound(seq, WeightAssignment::equal(seq.n()), StartMode::Self);
}

CostReport static_finger_cost(const StaticTree& tree, const AccessSequence& seq)
{
    if (tree.n() != seq.n())
        throw Error(Errc::DimensionMismatch, "tree over " + n_text(tree.n()) + ", sequence over " + n_text(seq.n()));
    std::vector<std::int64_t> costs;
    costs.reserve(seq.size());
    costs.push_back(tree.depth(seq[0]) + 1);
    for (std::size_t i = 1; i < seq.size(); ++i) costs.push_back(tree.path_nodes(seq[i - 1], seq[i]));
    return CostReport::from(std::move(costs));
}

WeightAssignment weights_from_tree(const StaticTree& tree, double base)
{
    if (!(base > 1.0) || !std::isfinite(base)) throw Error(Errc::BadBase, "base must exceed 1");
    std::vector<double> w(static_cast<std::size_t>(tree.n()));
    for (Key k = 1; k <= tree.n(); ++k) w[static_cast<std::size_t>(k - 1)] = std::pow(base, -tree.depth(k));
    return WeightAssignment(std::move(w));
}

StaticTree tree_from_weights(const WeightAssignment& w)
{
    const Key n = w.n();
    std::vector<Key> left(static_cast<std::size_t>(n) + 1, 0), right(left);
    Key root = 0;
    std::vector<Interval> todo{{1, n, 0, false}};
    while (!todo.empty()) {
        const Interval iv = todo.back();
        todo.pop_back();
        if (iv.lo > iv.hi) continue;
        const double half = range_weight(w, iv.lo, iv.hi) / 2.0;
        // range_weight(lo, r) is nondecreasing in r; find the first r reaching half.
        Key a = iv.lo, b = iv.hi;
        while (a < b) {
            const Key mid = a + (b - a) / 2;
            if (range_weight(w, iv.lo, mid) >= half) b = mid;
            else a = mid + 1;
        }
        const Key r = a;
        if (iv.parent == 0) root = r;
        else (iv.as_left ? left : right)[static_cast<std::size_t>(iv.parent)] = r;
        todo.push_back({iv.lo, r - 1, r, true});
        todo.push_back({r + 1, iv.hi, r, false});
    }
    return StaticTree(root, std::move(left), std::move(right));
}

namespace {

struct BstEnumerator {
    std::vector<Key> left, right;
    Key root = 0;
    std::vector<Interval> pending;
    const std::function<void(const StaticTree&)>& visit;

    void run()
    {
        if (pending.empty()) {
            visit(StaticTree(root, left, right));
            return;
        }
        const Interval iv = pending.back();
        pending.pop_back();
        if (iv.lo > iv.hi) {
            if (iv.parent != 0) (iv.as_left ? left : right)[static_cast<std::size_t>(iv.parent)] = 0;
            run();
        } else {
            for (Key r = iv.lo; r <= iv.hi; ++r) {
                if (iv.parent == 0) root = r;
                else (iv.as_left ? left : right)[static_cast<std::size_t>(iv.parent)] = r;
                pending.push_back({r + 1, iv.hi, r, false});
                pending.push_back({iv.lo, r - 1, r, true});
                run();
                pending.pop_back();
                pending.pop_back();
            }
        }
        pending.push_back(iv);
    }
};

} // namespace

void for_each_bst(Key n, const std::function<void(const StaticTree&)>& visit)
{
    if (n < 1) throw Error(Errc::BadN, n_text(n));
    BstEnumerator e{std::vector<Key>(static_cast<std::size_t>(n) + 1, 0),
                    std::vector<Key>(static_cast<std::size_t>(n) + 1, 0),
                    0,
                    {{1, n, 0, false}},
                    visit};
    e.run();
}

std::pair<StaticTree, std::int64_t> best_static_finger_cost(const AccessSequence& seq)
{
    const Key n = seq.n();
    if (n > kBestStaticMaxKeys) throw Error(Errc::TooLarge, "exhaustive tree search needs n <= 12");

    // Only the multiset of distinct consecutive pairs matters.
    std::map<std::pair<Key, Key>, std::int64_t> moves;
    std::int64_t repeats = 0;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        const Key a = std::min(seq[i - 1], seq[i]), b = std::max(seq[i - 1], seq[i]);
        if (a == b) ++repeats;
        else ++moves[{a, b}];
    }

    std::optional<StaticTree> best;
    std::int64_t best_total = std::numeric_limits<std::int64_t>::max();
    for_each_bst(n, [&](const StaticTree& tree) {
        std::int64_t total = tree.depth(seq[0]) + 1 + repeats;
        for (const auto& [pair, count] : moves) {
            total += count * tree.path_nodes(pair.first, pair.second);
            if (total >= best_total) return;
        }
        if (total < best_total) {
            best_total = total;
            best = tree;
        }
    });
    return {*best, best_total};
}

} // namespace wdf
