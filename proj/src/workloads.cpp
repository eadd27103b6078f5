#include "wdf/workloads.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

namespace wdf {

WorkloadKind parse_workload_kind(std::string_view name)
{
    if (name == "sequential") return WorkloadKind::Sequential;
    if (name == "uniform") return WorkloadKind::Uniform;
    if (name == "walk") return WorkloadKind::Walk;
    if (name == "zipf_finger") return WorkloadKind::ZipfFinger;
    if (name == "bit_reversal") return WorkloadKind::BitReversal;
    if (name == "trace") return WorkloadKind::Trace;
    throw Error(Errc::BadSpec, "unknown workload '" + std::string(name) + "'");
}

std::string_view to_string(WorkloadKind kind)
{
    switch (kind) {
    case WorkloadKind::Sequential: return "sequential";
    case WorkloadKind::Uniform: return "uniform";
    case WorkloadKind::Walk: return "walk";
    case WorkloadKind::ZipfFinger: return "zipf_finger";
    case WorkloadKind::BitReversal: return "bit_reversal";
    case WorkloadKind::Trace: return "trace";
    }
    return "?";
}

namespace {

Key clamp_key(std::int64_t k, Key n)
{
    return static_cast<Key>(std::clamp<std::int64_t>(k, 1, n));
}

std::vector<Key> bit_reversal(Key n)
{
    int bits = 0;
    while ((Key{1} << bits) < n) ++bits;
    std::vector<Key> out(static_cast<std::size_t>(n));
    for (Key i = 0; i < n; ++i) {
        Key r = 0;
        for (int b = 0; b < bits; ++b)
            if (i >> b & 1) r |= Key{1} << (bits - 1 - b);
        out[static_cast<std::size_t>(i)] = r + 1;
    }
    return out;
}

} // namespace

AccessSequence generate(const WorkloadSpec& spec)
{
    if (spec.kind == WorkloadKind::Trace) return read_trace(spec.trace_path);
    if (spec.n < 1) throw Error(Errc::BadSpec, "n must be >= 1");
    if (spec.m < 1) throw Error(Errc::BadSpec, "m must be >= 1");

    const Key n = spec.n;
    const std::size_t m = spec.m;
    SplitMix64 rng(spec.seed);
    std::vector<Key> out;
    out.reserve(m);

    switch (spec.kind) {
    case WorkloadKind::Sequential:
        for (std::size_t i = 0; i < m; ++i) out.push_back(static_cast<Key>(i % static_cast<std::size_t>(n)) + 1);
        break;
    case WorkloadKind::Uniform:
        for (std::size_t i = 0; i < m; ++i) out.push_back(static_cast<Key>(rng.below(static_cast<std::uint64_t>(n))) + 1);
        break;
    case WorkloadKind::Walk: {
        if (spec.max_step < 1) throw Error(Errc::BadSpec, "walk needs max step d >= 1");
        const std::int64_t d = spec.max_step;
        std::int64_t cur = (n + 1) / 2;
        out.push_back(static_cast<Key>(cur));
        while (out.size() < m) {
            const auto r = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(2 * d)));
            const std::int64_t step = r < d ? r - d : r - d + 1;
            cur = clamp_key(cur + step, n);
            out.push_back(static_cast<Key>(cur));
        }
        break;
    }
    case WorkloadKind::ZipfFinger: {
        if (!(spec.theta > 0.0) || !std::isfinite(spec.theta)) throw Error(Errc::BadSpec, "zipf_finger needs theta > 0");
        const Key longest = std::max<Key>(n - 1, 1);
        std::vector<double> cdf(static_cast<std::size_t>(longest));
        double acc = 0.0;
        for (Key k = 1; k <= longest; ++k) {
            acc += std::pow(static_cast<double>(k), -spec.theta);
            cdf[static_cast<std::size_t>(k - 1)] = acc;
        }
        std::int64_t cur = (n + 1) / 2;
        out.push_back(static_cast<Key>(cur));
        while (out.size() < m) {
            const double u = rng.unit() * acc;
            auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            if (it == cdf.end()) --it;
            const std::int64_t len = (it - cdf.begin()) + 1;
            const bool negative = (rng.next() >> 63) != 0;
            cur = clamp_key(cur + (negative ? -len : len), n);
            out.push_back(static_cast<Key>(cur));
        }
        break;
    }
    case WorkloadKind::BitReversal:
        if ((n & (n - 1)) != 0) throw Error(Errc::BadSpec, "bit_reversal needs n a power of two");
        if (m != static_cast<std::size_t>(n)) throw Error(Errc::BadSpec, "bit_reversal needs m == n");
        out = bit_reversal(n);
        break;
    case WorkloadKind::Trace: break;
    }
    return AccessSequence(std::move(out), n);
}

namespace {

template <typename T>
bool parse_number(std::string_view token, T& value)
{
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    return ec == std::errc{} && ptr == last;
}

std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        lines.push_back(text.substr(0, nl));
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IoError, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::IoError, "cannot write " + path.string());
    out << text;
    if (!out) throw Error(Errc::IoError, "write failed for " + path.string());
}

} // namespace

AccessSequence parse_trace(std::string_view text)
{
    const auto lines = split_lines(text);
    if (lines.empty()) throw Error(Errc::ParseError, "missing header", 1);

    const auto header = trim(lines[0]);
    const auto space = header.find_first_of(" \t");
    Key n = 0;
    std::int64_t m = 0;
    if (space == std::string_view::npos || !parse_number(trim(header.substr(0, space)), n) ||
        !parse_number(trim(header.substr(space + 1)), m))
        throw Error(Errc::ParseError, "header must be \"n m\"", 1);
    if (n < 1) throw Error(Errc::BadN, "n = " + std::to_string(n), 1);
    if (m < 1) throw Error(Errc::EmptySequence, "m must be >= 1", 1);

    std::vector<Key> keys;
    keys.reserve(static_cast<std::size_t>(m));
    std::size_t line_no = 1;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        ++line_no;
        const auto token = trim(lines[i]);
        if (token.empty()) {
            if (i + 1 == lines.size()) break; // trailing newline
            throw Error(Errc::ParseError, "blank line", line_no);
        }
        Key k = 0;
        if (!parse_number(token, k)) throw Error(Errc::ParseError, "expected an integer key", line_no);
        if (k < 1 || k > n)
            throw Error(Errc::KeyOutOfRange, "key " + std::to_string(k) + " not in [1, " + std::to_string(n) + "]",
                        line_no);
        if (static_cast<std::int64_t>(keys.size()) == m)
            throw Error(Errc::ParseError, "more keys than the header's m", line_no);
        keys.push_back(k);
    }
    if (static_cast<std::int64_t>(keys.size()) != m)
        throw Error(Errc::ParseError, "expected " + std::to_string(m) + " keys, found " + std::to_string(keys.size()),
                    line_no);
    return AccessSequence(std::move(keys), n);
}

std::string format_trace(const AccessSequence& seq)
{
    std::string out = fmt::format("{} {}\n", seq.n(), seq.size());
    out.reserve(out.size() + seq.size() * 6);
    for (Key k : seq.accesses()) fmt::format_to(std::back_inserter(out), "{}\n", k);
    return out;
}

AccessSequence read_trace(const std::filesystem::path& path)
{
    return parse_trace(slurp(path));
}

void write_trace(const AccessSequence& seq, const std::filesystem::path& path)
{
    spill(path, format_trace(seq));
}

WeightAssignment parse_weights(std::string_view text)
{
    std::vector<double> w;
    const auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto token = trim(lines[i]);
        if (token.empty()) {
            if (i + 1 == lines.size()) break;
            throw Error(Errc::ParseError, "blank line", i + 1);
        }
        double v = 0.0;
        if (!parse_number(token, v)) throw Error(Errc::ParseError, "expected a decimal weight", i + 1);
        if (!(v > 0.0) || !std::isfinite(v)) throw Error(Errc::BadWeight, "weight must be positive", i + 1);
        w.push_back(v);
    }
    if (w.empty()) throw Error(Errc::ParseError, "no weights", 1);
    return WeightAssignment(std::move(w));
}

WeightAssignment read_weights(const std::filesystem::path& path)
{
    return parse_weights(slurp(path));
}

void write_weights(const WeightAssignment& w, const std::filesystem::path& path)
{
    std::string out;
    for (double v : w.weights()) fmt::format_to(std::back_inserter(out), "{}\n", v);
    spill(path, out);
}

} // namespace wdf
