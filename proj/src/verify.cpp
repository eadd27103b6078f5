#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "wdf/geometry.hpp"
#include "wdf/greedy.hpp"
#include "wdf/harness.hpp"
#include "wdf/opt.hpp"
#include "wdf/workloads.hpp"

namespace wdf {

Suite parse_suite(std::string_view name)
{
    if (name == "satisfaction") return Suite::Satisfaction;
    if (name == "minimality") return Suite::Minimality;
    if (name == "opt") return Suite::Opt;
    if (name == "depth") return Suite::Depth;
    if (name == "roundtrip") return Suite::Roundtrip;
    if (name == "differential") return Suite::Differential;
    throw Error(Errc::BadSpec, "unknown suite '" + std::string(name) + "'");
}

std::string_view to_string(Suite suite)
{
    switch (suite) {
    case Suite::Satisfaction: return "satisfaction";
    case Suite::Minimality: return "minimality";
    case Suite::Opt: return "opt";
    case Suite::Depth: return "depth";
    case Suite::Roundtrip: return "roundtrip";
    case Suite::Differential: return "differential";
    }
    return "?";
}

namespace {

std::string describe(const AccessSequence& seq)
{
    return fmt::format("n={} S=({})", seq.n(), fmt::join(seq.accesses(), ","));
}

// Mixed-locality random instance: uniform, walk, zipf_finger or sequential.
AccessSequence random_instance(SplitMix64& rng, Key max_n, std::size_t max_m)
{
    WorkloadSpec spec;
    spec.n = static_cast<Key>(rng.below(static_cast<std::uint64_t>(max_n))) + 1;
    spec.m = static_cast<std::size_t>(rng.below(max_m)) + 1;
    spec.seed = rng.next();
    switch (rng.below(4)) {
    case 0: spec.kind = WorkloadKind::Uniform; break;
    case 1:
        spec.kind = WorkloadKind::Walk;
        spec.max_step = static_cast<Key>(rng.below(4)) + 1;
        break;
    case 2:
        spec.kind = WorkloadKind::ZipfFinger;
        spec.theta = 1.0 + 2.0 * rng.unit();
        break;
    default: spec.kind = WorkloadKind::Sequential; break;
    }
    return generate(spec);
}

VerifyReport report_for(Suite suite)
{
    VerifyReport r;
    r.suite = suite;
    return r;
}

void fail(VerifyReport& r, std::string what)
{
    if (r.passed) r.counterexample = std::move(what);
    r.passed = false;
}

constexpr std::size_t kNaiveCheckLimit = 600;

VerifyReport satisfaction(std::uint64_t seed)
{
    VerifyReport r = report_for(Suite::Satisfaction);
    SplitMix64 rng(seed);
    auto check = [&](const AccessSequence& seq) {
        ++r.instances;
        const auto run = greedy_execute(seq);
        bool ok = is_arborally_satisfied(run.points);
        if (ok && run.points.size() <= kNaiveCheckLimit) ok = is_arborally_satisfied_naive(run.points);
        for (std::size_t t = 0; ok && t < seq.size(); ++t)
            ok = run.points.contains({seq[t], static_cast<Time>(t + 1)}) && run.cost.per_access[t] >= 1;
        if (!ok) fail(r, describe(seq));
    };
    for (int i = 0; i < 1000 && r.passed; ++i) check(random_instance(rng, 64, 256));
    for (Key n = 1; n <= 4 && r.passed; ++n)
        for (std::size_t m = 1; m <= 4; ++m) for_each_sequence(n, m, check);
    r.summary = fmt::format("{} instances satisfied", r.instances);
    return r;
}

// Depth-first over all sequences of length <= max_m sharing greedy state
// along common prefixes.
void minimality_walk(VerifyReport& r, const GreedyState& state, std::vector<Key>& prefix, std::size_t max_m)
{
    if (!r.passed || prefix.size() == max_m) return;
    const Key n = state.n();
    const Time t = state.now() + 1;
    for (Key x = 1; x <= n && r.passed; ++x) {
        ++r.instances;
        const auto fast = state.row(x);
        const auto rows = brute_min_rows(state.emitted(), x, t, n);
        prefix.push_back(x);
        if (rows.size() != 1 || rows.front() != fast) {
            fail(r, fmt::format("n={} S=({}) row {}: greedy {{{}}}, minimal rows found {}", n, fmt::join(prefix, ","),
                                t, fmt::join(fast, ","), rows.size()));
        } else {
            GreedyState next = state;
            next.access(x);
            minimality_walk(r, next, prefix, max_m);
        }
        prefix.pop_back();
    }
}

VerifyReport minimality(std::uint64_t)
{
    VerifyReport r = report_for(Suite::Minimality);
    for (Key n = 1; n <= 5 && r.passed; ++n) {
        std::vector<Key> prefix;
        minimality_walk(r, GreedyState(n), prefix, 5);
    }
    r.summary = fmt::format("{} greedy rows matched the unique minimal row", r.instances);
    return r;
}

VerifyReport opt(std::uint64_t)
{
    VerifyReport r = report_for(Suite::Opt);
    double worst = 1.0;
    std::string worst_instance;
    for (Key n = 1; n <= 4; ++n) {
        for (std::size_t m = 1; m <= 4; ++m) {
            for_each_sequence(n, m, [&](const AccessSequence& seq) {
                ++r.instances;
                const auto best = opt_satisfied_superset(seq);
                const auto greedy = greedy_execute(seq, false).cost.total;
                const bool ok = best.size >= seq.size() && static_cast<std::int64_t>(best.size) <= greedy &&
                                best.witness.size() == best.size && is_arborally_satisfied_naive(best.witness);
                if (!ok) fail(r, describe(seq));
                const double ratio = static_cast<double>(greedy) / static_cast<double>(best.size);
                if (ratio > worst) {
                    worst = ratio;
                    worst_instance = describe(seq);
                }
            });
        }
    }
    r.summary = fmt::format("max greedy/OPT ratio {} at {}", worst, worst_instance.empty() ? "-" : worst_instance);
    return r;
}

VerifyReport depth(std::uint64_t seed)
{
    VerifyReport r = report_for(Suite::Depth);
    SplitMix64 rng(seed);
    for (int i = 0; i < 1000 && r.passed; ++i) {
        const auto n = static_cast<std::size_t>(rng.below(512)) + 1;
        std::vector<double> w(n);
        // Log-uniform over roughly twelve orders of magnitude.
        for (double& v : w) v = std::exp(rng.unit() * 28.0 - 14.0);
        const WeightAssignment weights(std::move(w));
        const StaticTree tree = tree_from_weights(weights);
        ++r.instances;
        for (Key k = 1; k <= weights.n(); ++k) {
            if (tree.depth(k) > std::log2(weights.total() / weights.weight(k)) + 1.0) {
                fail(r, fmt::format("vector #{} (n={}) key {}: depth {}", i, n, k, tree.depth(k)));
                break;
            }
        }
    }
    r.summary = fmt::format("{} weight vectors within the depth bound", r.instances);
    return r;
}

VerifyReport roundtrip(std::uint64_t seed)
{
    VerifyReport r = report_for(Suite::Roundtrip);
    const auto dir = std::filesystem::temp_directory_path() / fmt::format("wdf-roundtrip-{}", seed);
    std::filesystem::create_directories(dir);
    const auto path = dir / "trace.txt";

    std::vector<WorkloadSpec> specs;
    for (auto kind : {WorkloadKind::Sequential, WorkloadKind::Uniform, WorkloadKind::Walk, WorkloadKind::ZipfFinger}) {
        WorkloadSpec s;
        s.kind = kind;
        s.n = 64;
        s.m = 100;
        s.seed = seed;
        s.max_step = 3;
        s.theta = 2.5;
        specs.push_back(s);
    }
    WorkloadSpec br;
    br.kind = WorkloadKind::BitReversal;
    br.n = 64;
    br.m = 64;
    specs.push_back(br);

    for (const auto& spec : specs) {
        ++r.instances;
        const auto seq = generate(spec);
        const auto again = generate(spec);
        write_trace(seq, path);
        const auto back = read_trace(path);
        std::ifstream in(path, std::ios::binary);
        std::stringstream bytes;
        bytes << in.rdbuf();
        if (!(seq == again) || !(seq == back) || bytes.str() != format_trace(back))
            fail(r, fmt::format("workload {} seed {}", to_string(spec.kind), spec.seed));
    }
    std::filesystem::remove_all(dir);
    r.summary = fmt::format("{} traces round-tripped byte-identically", r.instances);
    return r;
}

PointSet random_points(SplitMix64& rng)
{
    PointSet p;
    const auto count = rng.below(14);
    const auto keys = rng.below(6) + 1, times = rng.below(6) + 1;
    for (std::uint64_t i = 0; i < count; ++i)
        p.insert({static_cast<Key>(rng.below(keys)) + 1, static_cast<Time>(rng.below(times)) + 1});
    return p;
}

VerifyReport differential(std::uint64_t seed)
{
    VerifyReport r = report_for(Suite::Differential);
    SplitMix64 rng(seed);
    for (int i = 0; i < 500 && r.passed; ++i) {
        ++r.instances;
        const auto seq = random_instance(rng, 128, 1024);
        GreedyState state(seq.n(), false);
        for (Key x : seq.accesses()) {
            if (state.row(x) != state.row_naive(x)) {
                fail(r, "greedy fast/naive rows differ on " + describe(seq));
                break;
            }
            state.access(x);
        }
        const auto shape = static_cast<InitialShape>(rng.below(3));
        if (run_splay(seq, shape).per_access != run_splay_reference(seq, shape).per_access)
            fail(r, "splay/reference costs differ on " + describe(seq));
    }
    for (int i = 0; i < 2000 && r.passed; ++i) {
        ++r.instances;
        const auto pts = random_points(rng);
        if (is_arborally_satisfied(pts) != is_arborally_satisfied_naive(pts)) {
            std::string text;
            for (Point p : pts.points()) text += fmt::format("({},{})", p.key, p.time);
            fail(r, "sweep/pairwise satisfaction checks differ on " + text);
        }
    }
    r.summary = fmt::format("{} differential instances agreed", r.instances);
    return r;
}

} // namespace

VerifyReport verify(Suite suite, std::uint64_t seed)
{
    try {
        switch (suite) {
        case Suite::Satisfaction: return satisfaction(seed);
        case Suite::Minimality: return minimality(seed);
        case Suite::Opt: return opt(seed);
        case Suite::Depth: return depth(seed);
        case Suite::Roundtrip: return roundtrip(seed);
        case Suite::Differential: return differential(seed);
        }
    } catch (const std::exception& e) {
        VerifyReport r = report_for(suite);
        fail(r, std::string("exception: ") + e.what());
        return r;
    }
    return {};
}

} // namespace wdf
