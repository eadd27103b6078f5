#pragma once

// Shared data model: keys in rank space 1..n, access sequences, positive
// weight vectors with prefix sums, and (key, time) point sets for the
// geometric view of BST executions.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wdf {

using Key = std::int32_t;
using Time = std::int32_t;

enum class Errc {
    EmptySequence,
    KeyOutOfRange,
    BadN,
    BadWeight,
    DimensionMismatch,
    TooLarge,
    BadBase,
    BadSpec,
    ParseError,
    IoError,
};

const char* to_string(Errc code);

/// Every failure in the library is reported as a wdf::Error carrying an
/// error code and, for file parsing, the 1-based line that caused it.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::optional<std::size_t> line = std::nullopt);

    Errc code() const noexcept { return code_; }
    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    Errc code_;
    std::optional<std::size_t> line_;
};

/// A validated query stream s_1..s_m over keys 1..n.
class AccessSequence {
public:
    /// Validates raw keys against n. Throws BadN, EmptySequence or
    /// KeyOutOfRange.
    AccessSequence(std::vector<Key> accesses, Key n);

    Key n() const noexcept { return n_; }
    std::size_t size() const noexcept { return accesses_.size(); }
    std::span<const Key> accesses() const noexcept { return accesses_; }
    // 0-based
    Key operator[](std::size_t i) const { return accesses_[i]; }

    /// First `count` accesses over the same keyspace.
    AccessSequence prefix(std::size_t count) const;

    friend bool operator==(const AccessSequence&, const AccessSequence&) = default;

private:
    Key n_;
    std::vector<Key> accesses_;
};

AccessSequence validate_sequence(std::span<const Key> raw, Key n);

/// Strictly positive per-key weights w_1..w_n with prefix sums.
///
/// Prefix sums are kept compensated (a rounded sum plus its accumulated
/// rounding error) so that a range sum keeps full relative precision even
/// when the range is tiny next to the total weight.
class WeightAssignment {
public:
    explicit WeightAssignment(std::vector<double> weights);

    static WeightAssignment equal(Key n);

    Key n() const noexcept { return static_cast<Key>(weights_.size()); }
    double weight(Key k) const;
    double total() const noexcept { return prefix_.back() + prefix_error_.back(); }
    std::span<const double> weights() const noexcept { return weights_; }
    // prefix()[k] = w_1 + ... + w_k, prefix()[0] = 0
    std::span<const double> prefix() const noexcept { return prefix_; }

    WeightAssignment scaled(double alpha) const;

    friend double range_weight(const WeightAssignment& w, Key a, Key b);

private:
    std::vector<double> weights_;
    std::vector<double> prefix_;
    std::vector<double> prefix_error_;
};

/// Sum of w_x for min(a,b) <= x <= max(a,b).
double range_weight(const WeightAssignment& w, Key a, Key b);

struct Point {
    Key key = 0;
    Time time = 0;

    // Ordered by time, then key: the row-major sweep order.
    friend constexpr std::strong_ordering operator<=>(const Point& a, const Point& b) noexcept
    {
        if (auto c = a.time <=> b.time; c != 0) return c;
        return a.key <=> b.key;
    }
    friend constexpr bool operator==(const Point&, const Point&) noexcept = default;
};

/// A duplicate-free set of points indexed both by row (time) and by column
/// (key). Keys and times are positive.
class PointSet {
public:
    PointSet() = default;
    PointSet(std::initializer_list<Point> points);
    explicit PointSet(std::span<const Point> points);

    /// Returns false if the point was already present.
    bool insert(Point p);
    bool contains(Point p) const;

    std::size_t size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    /// All points ordered by (time, key).
    std::vector<Point> points() const;

    const std::map<Time, std::vector<Key>>& rows() const noexcept { return rows_; }
    const std::map<Key, std::vector<Time>>& columns() const noexcept { return cols_; }

    /// Sorted keys present in row t (empty if none).
    std::span<const Key> row(Time t) const;
    std::span<const Time> column(Key k) const;

    friend bool operator==(const PointSet& a, const PointSet& b) { return a.rows_ == b.rows_; }

private:
    std::map<Time, std::vector<Key>> rows_;
    std::map<Key, std::vector<Time>> cols_;
    std::size_t size_ = 0;
};

/// Per-access cost of an algorithm run.
struct CostReport {
    std::vector<std::int64_t> per_access;
    std::int64_t total = 0;

    static CostReport from(std::vector<std::int64_t> costs);
};

} // namespace wdf
