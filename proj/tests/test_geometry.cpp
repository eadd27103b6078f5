#include <doctest.h>

#include "test_util.hpp"
#include "wdf/geometry.hpp"

using namespace wdf;

TEST_CASE("satisfaction examples")
{
    CHECK_FALSE(is_arborally_satisfied(PointSet{{1, 1}, {2, 2}}));
    CHECK(is_arborally_satisfied(PointSet{{1, 1}, {2, 2}, {2, 1}}));
    CHECK(is_arborally_satisfied(PointSet{{5, 1}, {5, 2}, {5, 3}}));
    CHECK(is_arborally_satisfied(PointSet{}));
    CHECK(is_arborally_satisfied(PointSet{{4, 4}}));
}

TEST_CASE("boundary points are witnesses")
{
    // (2,1) lies on the bottom edge of the rectangle (1,1)-(3,3).
    PointSet p{{1, 1}, {3, 3}, {2, 1}, {3, 1}};
    CHECK(is_arborally_satisfied(p));
    CHECK(is_arborally_satisfied_naive(p));
    // A witness strictly outside does not count.
    PointSet q{{1, 1}, {3, 3}, {4, 2}};
    CHECK_FALSE(is_arborally_satisfied(q));
}

TEST_CASE("unsatisfied_pairs examples")
{
    using Pairs = std::vector<std::pair<Point, Point>>;
    CHECK(unsatisfied_pairs(PointSet{{1, 1}, {2, 2}}) == Pairs{{{1, 1}, {2, 2}}});
    CHECK(unsatisfied_pairs(PointSet{{1, 1}, {2, 2}, {2, 1}}).empty());
    // Each of the three rectangles misses the third point.
    const Pairs want{{{1, 1}, {3, 2}}, {{1, 1}, {2, 3}}, {{3, 2}, {2, 3}}};
    CHECK(unsatisfied_pairs(PointSet{{1, 1}, {3, 2}, {2, 3}}) == want);
}

TEST_CASE("degenerate sets are satisfied")
{
    SplitMix64 rng(5);
    for (int i = 0; i < 200; ++i) {
        PointSet row, col;
        const auto k = static_cast<Key>(rng.below(9)) + 1;
        const auto t = static_cast<Time>(rng.below(9)) + 1;
        for (int j = 0; j < 10; ++j) {
            row.insert({static_cast<Key>(rng.below(30)) + 1, t});
            col.insert({k, static_cast<Time>(rng.below(30)) + 1});
        }
        CHECK(is_arborally_satisfied(row));
        CHECK(is_arborally_satisfied(col));
    }
}

TEST_CASE("sweep and pairwise checks agree on random sets")
{
    SplitMix64 rng(77);
    int satisfied = 0;
    for (int i = 0; i < 5000; ++i) {
        PointSet p;
        const auto count = rng.below(16);
        const auto keys = rng.below(6) + 1, times = rng.below(6) + 1;
        for (std::uint64_t j = 0; j < count; ++j)
            p.insert({static_cast<Key>(rng.below(keys)) + 1, static_cast<Time>(rng.below(times)) + 1});
        const bool sweep = is_arborally_satisfied(p);
        REQUIRE(sweep == is_arborally_satisfied_naive(p));
        REQUIRE(sweep == unsatisfied_pairs(p).empty());
        satisfied += sweep;
    }
    // Both outcomes must actually be exercised.
    CHECK(satisfied > 100);
    CHECK(satisfied < 4900);
}
