#pragma once

// Shared helpers for the unit tests: seeded random instances and a naive
// summation oracle.

#include <cmath>
#include <vector>

#include "wdf/core.hpp"
#include "wdf/workloads.hpp"

namespace wdf::test {

inline AccessSequence random_sequence(SplitMix64& rng, Key max_n, std::size_t max_m)
{
    const Key n = static_cast<Key>(rng.below(static_cast<std::uint64_t>(max_n))) + 1;
    const std::size_t m = static_cast<std::size_t>(rng.below(max_m)) + 1;
    std::vector<Key> keys(m);
    for (Key& k : keys) k = static_cast<Key>(rng.below(static_cast<std::uint64_t>(n))) + 1;
    return AccessSequence(std::move(keys), n);
}

inline WeightAssignment random_weights(SplitMix64& rng, std::size_t n, double log_spread = 10.0)
{
    std::vector<double> w(n);
    for (double& v : w) v = std::exp((rng.unit() - 0.5) * log_spread);
    return WeightAssignment(std::move(w));
}

inline double naive_range_sum(const WeightAssignment& w, Key a, Key b)
{
    if (a > b) std::swap(a, b);
    double s = 0.0;
    for (Key x = a; x <= b; ++x) s += w.weights()[static_cast<std::size_t>(x - 1)];
    return s;
}

inline double rel_err(double got, double want)
{
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

} // namespace wdf::test
