#pragma once

// Fixed experiment configurations shared by the calibration tool and the
// acceptance suite, so both measure exactly the same instances.

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "wdf/bounds.hpp"
#include "wdf/core.hpp"
#include "wdf/workloads.hpp"

namespace wdf::experiments {

inline constexpr Key kWalkKeys = 1 << 16;
inline constexpr std::size_t kWalkAccesses = 100000;
inline constexpr std::size_t kWalkCheckpoints[] = {1000, 10000, 100000};
inline constexpr Key kWalkSteps[] = {2, 8, 64};
inline constexpr std::uint64_t kSeeds[] = {1, 2, 3};

inline AccessSequence walk(Key d, std::uint64_t seed, std::size_t m = kWalkAccesses)
{
    WorkloadSpec spec;
    spec.kind = WorkloadKind::Walk;
    spec.n = kWalkKeys;
    spec.m = m;
    spec.seed = seed;
    spec.max_step = d;
    return generate(spec);
}

/// Ratio of cumulative cost to cumulative bound at each checkpoint.
inline std::vector<double> prefix_ratios(const CostReport& cost, const BoundReport& bound,
                                         std::span<const std::size_t> checkpoints)
{
    std::vector<double> out;
    double c = 0.0, b = 0.0;
    std::size_t i = 0;
    for (std::size_t cp : checkpoints) {
        for (; i < cp && i < cost.per_access.size(); ++i) {
            c += static_cast<double>(cost.per_access[i]);
            b += bound.per_access[i];
        }
        out.push_back(c / b);
    }
    return out;
}

inline constexpr Key kWeightedKeys = 1 << 12;
inline constexpr std::size_t kWeightedAccesses = 100000;
inline constexpr double kWeightedTheta = 2.5;

/// Skewed vector: key i gets (1 + rank_i)^-1.5 for a seeded random
/// permutation of ranks.
inline WeightAssignment skewed_weights(Key n, std::uint64_t seed = 7)
{
    std::vector<Key> rank(static_cast<std::size_t>(n));
    for (Key i = 0; i < n; ++i) rank[static_cast<std::size_t>(i)] = i;
    SplitMix64 rng(seed);
    for (std::size_t i = rank.size(); i > 1; --i) std::swap(rank[i - 1], rank[rng.below(i)]);
    std::vector<double> w(rank.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::pow(1.0 + rank[i], -1.5);
    return WeightAssignment(std::move(w));
}

/// Weights 2^-depth of the weighted-median tree over the skewed vector.
inline WeightAssignment tree_weights(Key n)
{
    return weights_from_tree(tree_from_weights(skewed_weights(n)), 2.0);
}

inline AccessSequence zipf_finger(std::uint64_t seed)
{
    WorkloadSpec spec;
    spec.kind = WorkloadKind::ZipfFinger;
    spec.n = kWeightedKeys;
    spec.m = kWeightedAccesses;
    spec.seed = seed;
    spec.theta = kWeightedTheta;
    return generate(spec);
}

inline constexpr std::size_t kStaticSequences = 100;
inline constexpr std::size_t kStaticLength = 50;

/// Sequences for the static-finger comparison: alternating uniform and
/// walk (d = 2) workloads.
inline AccessSequence static_probe(Key n, std::size_t index, std::size_t m = kStaticLength)
{
    WorkloadSpec spec;
    spec.kind = index % 2 == 0 ? WorkloadKind::Uniform : WorkloadKind::Walk;
    spec.n = n;
    spec.m = m;
    spec.seed = 1000 * static_cast<std::uint64_t>(n) + index;
    spec.max_step = 2;
    return generate(spec);
}

} // namespace wdf::experiments
