#pragma once

// Exact offline optimum of the geometric model for tiny instances: the
// smallest arborally satisfied superset of the access points inside the
// n x m access grid.

#include <cstddef>

#include "wdf/core.hpp"

namespace wdf {

struct OptResult {
    std::size_t size = 0;
    PointSet witness;
};

inline constexpr Key kOptMaxKeys = 5;
inline constexpr std::size_t kOptMaxAccesses = 5;

/// Iterative deepening over the number of added grid points. Throws
/// TooLarge unless n <= 5 and m <= 5.
OptResult opt_satisfied_superset(const AccessSequence& seq);

} // namespace wdf
