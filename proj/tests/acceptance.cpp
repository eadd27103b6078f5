// Acceptance suite: one line per criterion, "PASS" or "FAIL", followed by the
// measured values. Exit status is nonzero if any criterion fails.
//
// Frozen constants below were measured once with tools/calibrate.cpp on the
// exact instances defined in wdf/experiments.hpp.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <fmt/format.h>

#include "wdf/bounds.hpp"
#include "wdf/experiments.hpp"
#include "wdf/geometry.hpp"
#include "wdf/greedy.hpp"
#include "wdf/harness.hpp"
#include "wdf/opt.hpp"
#include "wdf/splay.hpp"
#include "wdf/workloads.hpp"

using namespace wdf;

namespace {

// Criterion 3: greedy / OPT over all n, m <= 4.
constexpr double kGreedyOverOptMax = 1.2;
// Criterion 5.
constexpr double kSequentialRatioCeiling = 1.5;
// Criterion 6: cumulative greedy / equal-weights bound, per walk step d.
constexpr double kWalkCeiling[] = {0.89, 0.94, 0.94}; // d = 2, 8, 64
// Criterion 7.
constexpr double kWeightedCeiling = 0.61;
// Criterion 8: wdf_term <= a * static cost + b, and best static >= greedy / C.
constexpr double kEquivA = 1.0;
constexpr double kEquivB = 1.33;
constexpr double kStaticC = 1.0;
// Criterion 10: bottom-up splay over 1..4096 from a left spine.
constexpr std::int64_t kSplaySequentialTotal = 22140;
constexpr double kSplayLinearCeiling = 5.5;

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome from_report(const VerifyReport& r)
{
    return {r.passed, r.passed ? r.summary : r.counterexample};
}

Outcome satisfaction()
{
    const auto t0 = Clock::now();
    Outcome o = from_report(verify(Suite::Satisfaction, 1));
    const double s = seconds_since(t0);
    if (s >= 60.0) o.pass = false;
    o.detail += fmt::format("; {:.2f}s (limit 60s)", s);
    return o;
}

Outcome minimality()
{
    const auto t0 = Clock::now();
    Outcome o = from_report(verify(Suite::Minimality, 1));
    const double s = seconds_since(t0);
    if (s >= 300.0) o.pass = false;
    o.detail += fmt::format("; {:.2f}s (limit 300s)", s);
    return o;
}

Outcome opt_dominance()
{
    Outcome o;
    double worst = 0.0;
    std::size_t count = 0;
    for (Key n = 1; n <= 4; ++n)
        for (std::size_t m = 1; m <= 4; ++m)
            for_each_sequence(n, m, [&](const AccessSequence& s) {
                ++count;
                const auto best = opt_satisfied_superset(s);
                const auto greedy = greedy_execute(s, false).cost.total;
                if (static_cast<std::int64_t>(best.size) > greedy || !is_arborally_satisfied_naive(best.witness))
                    o.pass = false;
                worst = std::max(worst, static_cast<double>(greedy) / static_cast<double>(best.size));
            });
    if (std::abs(worst - kGreedyOverOptMax) > 1e-12) o.pass = false;
    o.detail = fmt::format("{} instances, max greedy/OPT {} (frozen {})", count, worst, kGreedyOverOptMax);
    return o;
}

Outcome bound_calculator()
{
    Outcome o;
    SplitMix64 rng(4);
    double worst_rel = 0.0, worst_scale = 0.0;
    bool equal_exact = true;
    for (int i = 0; i < 1000; ++i) {
        const Key n = static_cast<Key>(rng.below(256)) + 1;
        const std::size_t m = static_cast<std::size_t>(rng.below(200)) + 1;
        std::vector<Key> keys(m);
        for (Key& k : keys) k = static_cast<Key>(rng.below(static_cast<std::uint64_t>(n))) + 1;
        const AccessSequence seq(keys, n);
        std::vector<double> raw(static_cast<std::size_t>(n));
        for (double& v : raw) v = std::exp((rng.unit() - 0.5) * 20.0);
        const WeightAssignment w(raw);
        const StartMode start = i % 2 == 0 ? StartMode::Self : StartMode::Root;
        const auto report = weighted_df_bound(seq, w, start);

        // Independent re-evaluation straight from the formula.
        double total = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            double want;
            if (k == 0) {
                double all = 0.0;
                for (double v : raw) all += v;
                want = start == StartMode::Self ? 1.0 : 1.0 + std::log2(all / raw[static_cast<std::size_t>(keys[0] - 1)]);
            } else {
                const Key lo = std::min(keys[k - 1], keys[k]), hi = std::max(keys[k - 1], keys[k]);
                double sum = 0.0;
                for (Key x = lo; x <= hi; ++x) sum += raw[static_cast<std::size_t>(x - 1)];
                const double lighter =
                    std::min(raw[static_cast<std::size_t>(keys[k - 1] - 1)], raw[static_cast<std::size_t>(keys[k] - 1)]);
                want = 1.0 + std::log2(sum / lighter);
            }
            total += want;
            worst_rel = std::max(worst_rel, std::abs(report.per_access[k] - want) / want);
        }
        worst_rel = std::max(worst_rel, std::abs(report.total - total) / total);

        const double alpha = std::exp((rng.unit() - 0.5) * 40.0);
        const auto scaled = weighted_df_bound(seq, w.scaled(alpha), start);
        for (std::size_t k = 0; k < m; ++k)
            worst_scale = std::max(worst_scale, std::abs(scaled.per_access[k] - report.per_access[k]));

        const auto df = dynamic_finger_bound(seq);
        for (std::size_t k = 1; k < m; ++k)
            if (df.per_access[k] != 1.0 + std::log2(std::abs(keys[k] - keys[k - 1]) + 1.0)) equal_exact = false;
    }
    o.pass = worst_rel <= 1e-12 && worst_scale <= 1e-9 && equal_exact;
    o.detail = fmt::format("max rel err {:.3g} (<= 1e-12), max scale drift {:.3g} (<= 1e-9), equal weights exact: {}",
                           worst_rel, worst_scale, equal_exact);
    return o;
}

Outcome sequential_scan()
{
    const auto t0 = Clock::now();
    std::vector<Key> scan(10000);
    std::iota(scan.begin(), scan.end(), 1);
    const AccessSequence seq(scan, 10000);
    const auto cost = greedy_execute(seq, false).cost.total;
    const auto bound = dynamic_finger_bound(seq);
    const double expected_bound = 2.0 * 10000 - 1 - 1 + bound.per_access[0];
    const double s = seconds_since(t0);
    Outcome o;
    o.pass = static_cast<double>(cost) <= kSequentialRatioCeiling * bound.total && bound.total == expected_bound &&
             s < 10.0;
    o.detail = fmt::format("greedy {} vs bound {} (ratio {:.4f} <= {}); {:.3f}s (limit 10s)", cost, bound.total,
                           static_cast<double>(cost) / bound.total, kSequentialRatioCeiling, s);
    return o;
}

Outcome locality()
{
    Outcome o;
    std::string lines;
    bool monotone = true;
    for (std::size_t di = 0; di < std::size(experiments::kWalkSteps); ++di) {
        const Key d = experiments::kWalkSteps[di];
        for (auto seed : experiments::kSeeds) {
            const auto seq = experiments::walk(d, seed);
            const auto r = experiments::prefix_ratios(greedy_execute(seq, false).cost, dynamic_finger_bound(seq),
                                                      experiments::kWalkCheckpoints);
            for (std::size_t k = 0; k < r.size(); ++k) {
                if (!std::isfinite(r[k]) || r[k] > kWalkCeiling[di]) o.pass = false;
                if (k > 0 && r[k] > r[k - 1]) monotone = false;
            }
            lines += fmt::format(" [d={} seed={}: {:.4f} {:.4f} {:.4f}]", d, seed, r[0], r[1], r[2]);
        }
    }
    if (!monotone) o.pass = false;
    o.detail = fmt::format("non-increasing in m: {}; ceilings 0.89/0.94/0.94;{}", monotone ? "yes" : "NO", lines);
    return o;
}

Outcome weighted()
{
    Outcome o;
    const auto w = experiments::tree_weights(experiments::kWeightedKeys);
    for (auto seed : experiments::kSeeds) {
        ExperimentOptions opts;
        opts.weights = w;
        const auto r = run_experiment(experiments::zipf_finger(seed), opts);
        if (!(r.fit.ratio <= kWeightedCeiling)) o.pass = false;
        o.detail += fmt::format("seed {} ratio {:.4f}; ", seed, r.fit.ratio);
    }
    o.detail += fmt::format("ceiling {}", kWeightedCeiling);
    return o;
}

Outcome static_equivalence()
{
    Outcome o;
    double worst_slack = -1e300;
    std::size_t trees = 0;
    for (Key n = 1; n <= 8; ++n) {
        std::vector<AccessSequence> probes;
        for (std::size_t i = 0; i < 100; ++i) {
            WorkloadSpec spec;
            spec.kind = WorkloadKind::Uniform;
            spec.n = n;
            spec.m = 50;
            spec.seed = 77 * static_cast<std::uint64_t>(n) + i;
            probes.push_back(generate(spec));
        }
        for_each_bst(n, [&](const StaticTree& tree) {
            ++trees;
            const auto w = weights_from_tree(tree, 2.0);
            for (const auto& seq : probes) {
                const auto bound = weighted_df_bound(seq, w);
                const auto cost = static_finger_cost(tree, seq);
                for (std::size_t k = 0; k < seq.size(); ++k)
                    worst_slack = std::max(worst_slack, bound.per_access[k] -
                                                            (kEquivA * static_cast<double>(cost.per_access[k]) + kEquivB));
            }
        });
    }
    if (worst_slack > 0.0) o.pass = false;

    double worst_ratio = 0.0;
    for (Key n = 1; n <= 10; ++n)
        for (std::size_t i = 0; i < experiments::kStaticSequences; ++i) {
            const auto seq = experiments::static_probe(n, i);
            const auto best = best_static_finger_cost(seq).second;
            const auto greedy = greedy_execute(seq, false).cost.total;
            worst_ratio = std::max(worst_ratio, static_cast<double>(greedy) / static_cast<double>(best));
            if (static_cast<double>(best) < static_cast<double>(greedy) / kStaticC) o.pass = false;
        }
    o.detail = fmt::format("{} trees, max(term - ({}*cost + {})) = {:.4f}; max greedy/best-static {} (C = {})", trees,
                           kEquivA, kEquivB, worst_slack, worst_ratio, kStaticC);
    return o;
}

Outcome depth_bound()
{
    return from_report(verify(Suite::Depth, 9));
}

Outcome splay_baseline()
{
    Outcome o;
    SplitMix64 rng(10);
    for (int i = 0; i < 500 && o.pass; ++i) {
        const Key n = static_cast<Key>(rng.below(128)) + 1;
        auto tree = SplayTree::make(n, static_cast<InitialShape>(rng.below(3)));
        std::vector<Key> expected(static_cast<std::size_t>(n));
        std::iota(expected.begin(), expected.end(), 1);
        const auto m = rng.below(512) + 1;
        for (std::uint64_t k = 0; k < m; ++k) {
            const Key x = static_cast<Key>(rng.below(static_cast<std::uint64_t>(n))) + 1;
            tree.access(x);
            if (tree.root() != x || tree.in_order() != expected) {
                o.pass = false;
                break;
            }
        }
    }
    std::vector<Key> scan(4096);
    std::iota(scan.begin(), scan.end(), 1);
    const auto total = run_splay(AccessSequence(scan, 4096), InitialShape::LeftSpine).total;
    if (total != kSplaySequentialTotal || static_cast<double>(total) > kSplayLinearCeiling * 4096) o.pass = false;

    const std::vector<Key> same(300, 5);
    for (auto shape : {InitialShape::Balanced, InitialShape::LeftSpine, InitialShape::RightSpine}) {
        const int depth = initial_tree(9, shape).depth(5);
        if (run_splay(AccessSequence(same, 9), shape).total != depth + 1 + 299) o.pass = false;
    }
    o.detail = fmt::format("500 random runs ordered; sequential n=4096 total {} (frozen {}, ceiling {}n)", total,
                           kSplaySequentialTotal, kSplayLinearCeiling);
    return o;
}

Outcome reproducibility()
{
    Outcome o = from_report(verify(Suite::Roundtrip, 11));
    // The renderers behind every CLI subcommand are pure functions of their inputs.
    WorkloadSpec spec;
    spec.kind = WorkloadKind::ZipfFinger;
    spec.n = 300;
    spec.m = 2000;
    spec.seed = 5;
    spec.theta = 1.8;
    std::vector<std::string> outputs[2];
    for (auto& out : outputs) {
        const auto seq = generate(spec);
        ExperimentOptions g;
        g.keep_points = true;
        const auto rg = run_experiment(seq, g);
        ExperimentOptions sp;
        sp.algorithm = Algorithm::Splay;
        sp.initial = InitialShape::RightSpine;
        sp.weights = experiments::skewed_weights(300);
        sp.start = StartMode::Root;
        const auto rs = run_experiment(seq, sp);
        out = {format_trace(seq), experiment_csv(seq, rg), points_csv(rg.points), experiment_csv(seq, rs),
               bound_csv(seq, rs.bound), fit_csv_text(rs.fit)};
    }
    if (outputs[0] != outputs[1]) o.pass = false;
    o.detail += "; CLI renderers byte-identical across runs";
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 satisfaction", satisfaction},
        {"2 greedy minimality", minimality},
        {"3 OPT dominance", opt_dominance},
        {"4 bound calculator", bound_calculator},
        {"5 sequential-scan regime", sequential_scan},
        {"6 locality regime", locality},
        {"7 weighted regime", weighted},
        {"8 static-finger equivalence", static_equivalence},
        {"9 tree_from_weights depth bound", depth_bound},
        {"10 splay baseline", splay_baseline},
        {"11 reproducibility", reproducibility},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        fmt::print("[{}] {}: {}\n", o.pass ? "PASS" : "FAIL", name, o.detail);
        std::fflush(stdout);
    }
    fmt::print("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
