#pragma once

// Experiment driver behind the command-line tool: runs an algorithm on a
// sequence, evaluates the weighted finger bound alongside it, fits the
// cumulative cost against the cumulative bound, and hosts the verification
// suites.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "wdf/bounds.hpp"
#include "wdf/core.hpp"
#include "wdf/splay.hpp"

namespace wdf {

enum class Algorithm { Greedy, Splay };

/// Least squares of cumulative cost (y) on cumulative bound (x).
/// ratio = total cost / total bound.
struct FitResult {
    double ratio = 0.0;
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

/// Throws DimensionMismatch on unequal or empty series.
FitResult fit(std::span<const double> cost, std::span<const double> bound);
FitResult fit(const CostReport& cost, const BoundReport& bound);

/// Reads the "cost" column of the first file and the "bound" (or "term")
/// column of the second.
FitResult fit_csv(const std::filesystem::path& cost_csv, const std::filesystem::path& bound_csv);

struct ExperimentOptions {
    Algorithm algorithm = Algorithm::Greedy;
    std::optional<WeightAssignment> weights; // equal weights when empty
    StartMode start = StartMode::Self;
    InitialShape initial = InitialShape::Balanced;
    bool keep_points = false;
};

struct ExperimentResult {
    CostReport cost;
    BoundReport bound;
    FitResult fit;
    PointSet points; // greedy only, when requested
};

ExperimentResult run_experiment(const AccessSequence& seq, const ExperimentOptions& options);

// CSV renderers; doubles use the shortest round-trip representation.
std::string experiment_csv(const AccessSequence& seq, const ExperimentResult& result); // i,key,cost,bound
std::string bound_csv(const AccessSequence& seq, const BoundReport& bound);            // i,key,term
std::string points_csv(const PointSet& points);                                        // time,key
std::string fit_csv_text(const FitResult& fit);                                        // ratio,slope,intercept,r2

/// Calls `visit` for each of the n^m sequences over keys 1..n, in
/// lexicographic order.
void for_each_sequence(Key n, std::size_t m, const std::function<void(const AccessSequence&)>& visit);

enum class Suite { Satisfaction, Minimality, Opt, Depth, Roundtrip, Differential };

Suite parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

struct VerifyReport {
    Suite suite = Suite::Satisfaction;
    bool passed = true;
    std::size_t instances = 0;
    std::string summary;        // e.g. the max observed greedy/OPT ratio
    std::string counterexample; // set on failure
};

/// Runs one property suite. Failures are reported, never thrown.
VerifyReport verify(Suite suite, std::uint64_t seed);

} // namespace wdf
