#include "wdf/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wdf {

const char* to_string(Errc code)
{
    switch (code) {
    case Errc::EmptySequence: return "EmptySequence";
    case Errc::KeyOutOfRange: return "KeyOutOfRange";
    case Errc::BadN: return "BadN";
    case Errc::BadWeight: return "BadWeight";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::BadBase: return "BadBase";
    case Errc::BadSpec: return "BadSpec";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
    }
    return "Unknown";
}

namespace {

std::string decorate(Errc code, const std::string& what, std::optional<std::size_t> line)
{
    std::string s = to_string(code);
    if (line) s += " at line " + std::to_string(*line);
    if (!what.empty()) s += ": " + what;
    return s;
}

} // namespace

Error::Error(Errc code, const std::string& what, std::optional<std::size_t> line)
    : std::runtime_error(decorate(code, what, line)), code_(code), line_(line)
{
}

AccessSequence::AccessSequence(std::vector<Key> accesses, Key n)
    : n_(n), accesses_(std::move(accesses))
{
    if (n_ < 1) throw Error(Errc::BadN, "n = " + std::to_string(n_));
    if (accesses_.empty()) throw Error(Errc::EmptySequence, "no accesses");
    for (std::size_t i = 0; i < accesses_.size(); ++i) {
        Key k = accesses_[i];
        if (k < 1 || k > n_)
            throw Error(Errc::KeyOutOfRange,
                        "access " + std::to_string(i + 1) + " = " + std::to_string(k) +
                            " not in [1, " + std::to_string(n_) + "]");
    }
}

AccessSequence AccessSequence::prefix(std::size_t count) const
{
    count = std::min(count, accesses_.size());
    return AccessSequence({accesses_.begin(), accesses_.begin() + static_cast<std::ptrdiff_t>(count)}, n_);
}

AccessSequence validate_sequence(std::span<const Key> raw, Key n)
{
    return AccessSequence({raw.begin(), raw.end()}, n);
}

WeightAssignment::WeightAssignment(std::vector<double> weights) : weights_(std::move(weights))
{
    if (weights_.empty()) throw Error(Errc::BadN, "empty weight vector");
    prefix_.resize(weights_.size() + 1, 0.0);
    prefix_error_.resize(weights_.size() + 1, 0.0);
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        double w = weights_[i];
        if (!(w > 0.0) || !std::isfinite(w))
            throw Error(Errc::BadWeight, "w_" + std::to_string(i + 1) + " must be positive and finite");
        // TwoSum: s + e == prefix + w exactly.
        const double s = prefix_[i] + w;
        const double wv = s - prefix_[i];
        const double e = (prefix_[i] - (s - wv)) + (w - wv);
        prefix_[i + 1] = s;
        prefix_error_[i + 1] = prefix_error_[i] + e;
    }
}

WeightAssignment WeightAssignment::equal(Key n)
{
    if (n < 1) throw Error(Errc::BadN, "n = " + std::to_string(n));
    return WeightAssignment(std::vector<double>(static_cast<std::size_t>(n), 1.0));
}

double WeightAssignment::weight(Key k) const
{
    if (k < 1 || k > n()) throw Error(Errc::KeyOutOfRange, "key " + std::to_string(k));
    return weights_[static_cast<std::size_t>(k - 1)];
}

WeightAssignment WeightAssignment::scaled(double alpha) const
{
    std::vector<double> w(weights_);
    for (double& x : w) x *= alpha;
    return WeightAssignment(std::move(w));
}

double range_weight(const WeightAssignment& w, Key a, Key b)
{
    if (a < 1 || a > w.n() || b < 1 || b > w.n())
        throw Error(Errc::KeyOutOfRange,
                    "range [" + std::to_string(a) + ", " + std::to_string(b) + "] with n = " + std::to_string(w.n()));
    if (a > b) std::swap(a, b);
    const auto hi = static_cast<std::size_t>(b);
    const auto lo = static_cast<std::size_t>(a - 1);
    return (w.prefix_[hi] - w.prefix_[lo]) + (w.prefix_error_[hi] - w.prefix_error_[lo]);
}

PointSet::PointSet(std::initializer_list<Point> points)
{
    for (Point p : points) insert(p);
}

PointSet::PointSet(std::span<const Point> points)
{
    for (Point p : points) insert(p);
}

bool PointSet::insert(Point p)
{
    if (p.key < 1 || p.time < 1)
        throw Error(Errc::KeyOutOfRange, "point coordinates must be positive");
    auto& row = rows_[p.time];
    auto it = std::lower_bound(row.begin(), row.end(), p.key);
    if (it != row.end() && *it == p.key) return false;
    row.insert(it, p.key);
    auto& col = cols_[p.key];
    col.insert(std::lower_bound(col.begin(), col.end(), p.time), p.time);
    ++size_;
    return true;
}

bool PointSet::contains(Point p) const
{
    auto it = rows_.find(p.time);
    return it != rows_.end() && std::binary_search(it->second.begin(), it->second.end(), p.key);
}

std::vector<Point> PointSet::points() const
{
    std::vector<Point> out;
    out.reserve(size_);
    for (const auto& [t, keys] : rows_)
        for (Key k : keys) out.push_back({k, t});
    return out;
}

std::span<const Key> PointSet::row(Time t) const
{
    auto it = rows_.find(t);
    if (it == rows_.end()) return {};
    return it->second;
}

std::span<const Time> PointSet::column(Key k) const
{
    auto it = cols_.find(k);
    if (it == cols_.end()) return {};
    return it->second;
}

CostReport CostReport::from(std::vector<std::int64_t> costs)
{
    CostReport r;
    r.total = std::accumulate(costs.begin(), costs.end(), std::int64_t{0});
    r.per_access = std::move(costs);
    return r;
}

} // namespace wdf
