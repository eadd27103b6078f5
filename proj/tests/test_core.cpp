#include <doctest.h>

#include "test_util.hpp"
#include "wdf/core.hpp"

using namespace wdf;

namespace {

Errc code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected wdf::Error");
    return Errc::IoError;
}

} // namespace

TEST_CASE("validate_sequence accepts and rejects")
{
    const std::vector<Key> ok{2, 1, 2};
    const auto seq = validate_sequence(ok, 2);
    CHECK(seq.n() == 2);
    CHECK(seq.size() == 3);
    CHECK(seq[2] == 2);

    const std::vector<Key> bad{3};
    CHECK(code_of([&] { validate_sequence(bad, 2); }) == Errc::KeyOutOfRange);
    CHECK(code_of([] { validate_sequence({}, 5); }) == Errc::EmptySequence);
    CHECK(code_of([&] { validate_sequence(ok, 0); }) == Errc::BadN);
    const std::vector<Key> zero{0};
    CHECK(code_of([&] { validate_sequence(zero, 3); }) == Errc::KeyOutOfRange);
}

TEST_CASE("prefix keeps n")
{
    const AccessSequence s({1, 2, 3, 4}, 9);
    const auto p = s.prefix(2);
    CHECK(p.n() == 9);
    CHECK(p.size() == 2);
    CHECK(p[1] == 2);
}

TEST_CASE("range_weight examples")
{
    const WeightAssignment ones({1, 1, 1, 1});
    CHECK(range_weight(ones, 1, 4) == 4.0);
    CHECK(range_weight(ones, 3, 3) == 1.0);

    const WeightAssignment w({0.5, 2, 0.25});
    const double oracle = test::naive_range_sum(w, 1, 3);
    CHECK(oracle == 2.75);
    CHECK(range_weight(w, 3, 1) == doctest::Approx(oracle).epsilon(1e-15));
    CHECK(code_of([&] { range_weight(w, 0, 2); }) == Errc::KeyOutOfRange);
    CHECK(code_of([&] { range_weight(w, 1, 4); }) == Errc::KeyOutOfRange);
}

TEST_CASE("weights must be positive and finite")
{
    CHECK(code_of([] { WeightAssignment({1.0, 0.0}); }) == Errc::BadWeight);
    CHECK(code_of([] { WeightAssignment({-1.0}); }) == Errc::BadWeight);
    CHECK(code_of([] { WeightAssignment({1.0, std::nan("")}); }) == Errc::BadWeight);
    CHECK(code_of([] { WeightAssignment(std::vector<double>{}); }) == Errc::BadN);

    const WeightAssignment w({1.5, 2.5});
    CHECK(w.total() == 4.0);
    CHECK(w.prefix()[0] == 0.0);
    CHECK(w.prefix()[2] == 4.0);
}

TEST_CASE("range_weight properties on random vectors")
{
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto n = static_cast<std::size_t>(rng.below(256)) + 1;
        const auto w = test::random_weights(rng, n, 20.0);
        const Key nk = static_cast<Key>(n);
        for (int q = 0; q < 8; ++q) {
            Key a = static_cast<Key>(rng.below(n)) + 1;
            Key c = static_cast<Key>(rng.below(n)) + 1;
            if (a > c) std::swap(a, c);
            const double got = range_weight(w, a, c);
            REQUIRE(test::rel_err(got, test::naive_range_sum(w, a, c)) <= 1e-12);
            CHECK(range_weight(w, c, a) == got);
            if (a < c) {
                const Key b = a + static_cast<Key>(rng.below(static_cast<std::uint64_t>(c - a)));
                CHECK(test::rel_err(range_weight(w, a, b) + range_weight(w, b + 1, c), got) <= 1e-12);
            }
        }
        CHECK(w.n() == nk);
    }
}

TEST_CASE("point set indices stay consistent")
{
    PointSet p{{3, 2}, {1, 2}, {1, 1}};
    CHECK(p.size() == 3);
    CHECK_FALSE(p.insert({1, 2}));
    CHECK(p.size() == 3);
    CHECK(p.contains({3, 2}));
    CHECK_FALSE(p.contains({2, 2}));
    const std::vector<Point> want{{1, 1}, {1, 2}, {3, 2}};
    CHECK(p.points() == want);
    CHECK(std::vector<Key>(p.row(2).begin(), p.row(2).end()) == std::vector<Key>{1, 3});
    CHECK(std::vector<Time>(p.column(1).begin(), p.column(1).end()) == std::vector<Time>{1, 2});
    CHECK(p.row(7).empty());
    CHECK(code_of([&] { p.insert({0, 1}); }) == Errc::KeyOutOfRange);
}
