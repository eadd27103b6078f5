// Measures the empirical constants that the acceptance suite freezes:
// greedy/OPT ratios, cost/bound ratios on the sequential, walk and weighted
// regimes, the static-finger equivalence constants and the splay
// sequential-scan total. Prints one line per quantity.

#include <algorithm>
#include <cstdio>
#include <numeric>

#include <fmt/format.h>

#include "wdf/bounds.hpp"
#include "wdf/experiments.hpp"
#include "wdf/greedy.hpp"
#include "wdf/harness.hpp"
#include "wdf/opt.hpp"
#include "wdf/splay.hpp"

using namespace wdf;

int main()
{
    {
        double worst = 0.0;
        for (Key n = 1; n <= 4; ++n)
            for (std::size_t m = 1; m <= 4; ++m)
                for_each_sequence(n, m, [&](const AccessSequence& s) {
                    const double r = static_cast<double>(greedy_execute(s, false).cost.total) /
                                     static_cast<double>(opt_satisfied_superset(s).size);
                    worst = std::max(worst, r);
                });
        fmt::print("greedy_over_opt_max(n,m<=4) {}\n", worst);
    }
    {
        std::vector<Key> scan(10000);
        std::iota(scan.begin(), scan.end(), 1);
        const AccessSequence s(scan, 10000);
        const auto c = greedy_execute(s, false).cost.total;
        const auto b = dynamic_finger_bound(s).total;
        fmt::print("sequential_1e4 cost {} bound {} ratio {}\n", c, b, static_cast<double>(c) / b);
    }
    for (Key d : experiments::kWalkSteps) {
        for (auto seed : experiments::kSeeds) {
            const auto s = experiments::walk(d, seed);
            const auto r = experiments::prefix_ratios(greedy_execute(s, false).cost, dynamic_finger_bound(s),
                                                      experiments::kWalkCheckpoints);
            fmt::print("walk d={} seed={} ratios {:.6f} {:.6f} {:.6f}\n", d, seed, r[0], r[1], r[2]);
        }
    }
    {
        const auto s = experiments::walk(8, 42);
        ExperimentOptions o;
        fmt::print("fit walk d=8 seed=42 ratio {}\n", run_experiment(s, o).fit.ratio);
    }
    {
        const auto w = experiments::tree_weights(experiments::kWeightedKeys);
        for (auto seed : experiments::kSeeds) {
            const auto s = experiments::zipf_finger(seed);
            ExperimentOptions o;
            o.weights = w;
            const auto r = run_experiment(s, o);
            const auto eq = run_experiment(s, {});
            fmt::print("weighted zipf seed={} ratio {:.6f} (equal-weights ratio {:.6f})\n", seed, r.fit.ratio,
                       eq.fit.ratio);
        }
    }
    {
        // Exhaustive over trees and consecutive pairs: the excess of the
        // bound term over the static path length.
        double worst_excess = -1e9, worst_ratio = 0.0;
        for (Key n = 1; n <= 8; ++n) {
            for_each_bst(n, [&](const StaticTree& t) {
                const auto w = weights_from_tree(t, 2.0);
                for (Key a = 1; a <= n; ++a)
                    for (Key b = 1; b <= n; ++b) {
                        const double term = wdf_term(w, a, b);
                        const double cost = t.path_nodes(a, b);
                        worst_excess = std::max(worst_excess, term - cost);
                        worst_ratio = std::max(worst_ratio, term / cost);
                    }
            });
        }
        fmt::print("wdf_term - static_path max (a=1) {}; wdf_term/static_path max {}\n", worst_excess, worst_ratio);
    }
    {
        double worst = 0.0;
        for (Key n = 1; n <= 10; ++n)
            for (std::size_t i = 0; i < experiments::kStaticSequences; ++i) {
                const auto s = experiments::static_probe(n, i);
                const double r = static_cast<double>(greedy_execute(s, false).cost.total) /
                                 static_cast<double>(best_static_finger_cost(s).second);
                worst = std::max(worst, r);
            }
        fmt::print("greedy_over_best_static max(n<=10,m=50) {}\n", worst);
    }
    {
        std::vector<Key> scan(4096);
        std::iota(scan.begin(), scan.end(), 1);
        const auto t = run_splay(AccessSequence(scan, 4096), InitialShape::LeftSpine).total;
        fmt::print("splay sequential n=4096 left_spine total {} ({} per key)\n", t, static_cast<double>(t) / 4096);
    }
    return 0;
}
