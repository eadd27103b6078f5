#include "wdf/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "wdf/greedy.hpp"

namespace wdf {

FitResult fit(std::span<const double> cost, std::span<const double> bound)
{
    if (cost.size() != bound.size() || cost.empty())
        throw Error(Errc::DimensionMismatch,
                    "series lengths " + std::to_string(cost.size()) + " and " + std::to_string(bound.size()));

    const std::size_t n = cost.size();
    std::vector<double> x(n), y(n);
    double cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cx += bound[i];
        cy += cost[i];
        x[i] = cx;
        y[i] = cy;
    }

    FitResult r;
    r.ratio = cy / cx;

    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) {
        // A single point: the line through the origin.
        r.slope = r.ratio;
        r.intercept = 0.0;
        r.r2 = 1.0;
        return r;
    }
    r.slope = sxy / sxx;
    r.intercept = my - r.slope * mx;
    r.r2 = syy == 0.0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
    return r;
}

FitResult fit(const CostReport& cost, const BoundReport& bound)
{
    std::vector<double> c(cost.per_access.begin(), cost.per_access.end());
    return fit(c, bound.per_access);
}

namespace {

std::vector<std::string_view> split_commas(std::string_view line)
{
    std::vector<std::string_view> out;
    while (true) {
        const auto comma = line.find(',');
        auto field = line.substr(0, comma);
        while (!field.empty() && (field.back() == '\r' || field.back() == ' ')) field.remove_suffix(1);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        out.push_back(field);
        if (comma == std::string_view::npos) break;
        line.remove_prefix(comma + 1);
    }
    return out;
}

std::vector<double> read_column(const std::filesystem::path& path, std::initializer_list<std::string_view> names)
{
    std::ifstream in(path);
    if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw Error(Errc::ParseError, "missing CSV header in " + path.string(), 1);
    const auto header = split_commas(line);
    std::size_t column = header.size();
    for (auto name : names) {
        auto it = std::find(header.begin(), header.end(), name);
        if (it != header.end()) {
            column = static_cast<std::size_t>(it - header.begin());
            break;
        }
    }
    if (column == header.size())
        throw Error(Errc::ParseError, "no column named " + std::string(*names.begin()) + " in " + path.string(), 1);

    std::vector<double> values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_commas(line);
        double v = 0.0;
        if (column >= fields.size()) throw Error(Errc::ParseError, "short row", line_no);
        const auto f = fields[column];
        auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
        if (ec != std::errc{} || ptr != f.data() + f.size()) throw Error(Errc::ParseError, "not a number", line_no);
        values.push_back(v);
    }
    return values;
}

} // namespace

FitResult fit_csv(const std::filesystem::path& cost_csv, const std::filesystem::path& bound_csv)
{
    const auto cost = read_column(cost_csv, {"cost"});
    const auto bound = read_column(bound_csv, {"bound", "term"});
    return fit(cost, bound);
}

ExperimentResult run_experiment(const AccessSequence& seq, const ExperimentOptions& options)
{
    ExperimentResult result;
    if (options.algorithm == Algorithm::Greedy) {
        auto run = greedy_execute(seq, options.keep_points);
        result.cost = std::move(run.cost);
        result.points = std::move(run.points);
    } else {
        result.cost = run_splay(seq, options.initial);
    }
    result.bound = options.weights ? weighted_df_bound(seq, *options.weights, options.start)
                                   : weighted_df_bound(seq, WeightAssignment::equal(seq.n()), options.start);
    result.fit = fit(result.cost, result.bound);
    return result;
}

std::string experiment_csv(const AccessSequence& seq, const ExperimentResult& result)
{
    std::string out = "i,key,cost,bound\n";
    for (std::size_t i = 0; i < seq.size(); ++i)
        fmt::format_to(std::back_inserter(out), "{},{},{},{}\n", i + 1, seq[i], result.cost.per_access[i],
                       result.bound.per_access[i]);
    return out;
}

std::string bound_csv(const AccessSequence& seq, const BoundReport& bound)
{
    std::string out = "i,key,term\n";
    for (std::size_t i = 0; i < seq.size(); ++i)
        fmt::format_to(std::back_inserter(out), "{},{},{}\n", i + 1, seq[i], bound.per_access[i]);
    return out;
}

std::string points_csv(const PointSet& points)
{
    std::string out = "time,key\n";
    for (Point p : points.points()) fmt::format_to(std::back_inserter(out), "{},{}\n", p.time, p.key);
    return out;
}

std::string fit_csv_text(const FitResult& f)
{
    return fmt::format("ratio,slope,intercept,r2\n{},{},{},{}\n", f.ratio, f.slope, f.intercept, f.r2);
}

void for_each_sequence(Key n, std::size_t m, const std::function<void(const AccessSequence&)>& visit)
{
    std::vector<Key> keys(m, 1);
    while (true) {
        visit(AccessSequence(keys, n));
        std::size_t i = m;
        while (i > 0 && keys[i - 1] == n) keys[--i] = 1;
        if (i == 0) return;
        ++keys[i - 1];
    }
}

} // namespace wdf
