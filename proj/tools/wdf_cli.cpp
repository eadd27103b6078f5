// wdf: command-line front end.
//
//   wdf gen --workload walk --n 65536 --m 100000 --seed 42 --d 8 --out walk.txt
//   wdf run --algo greedy --trace walk.txt --equal > walk.csv
//   wdf bound --trace walk.txt --weights w.txt --start root
//   wdf verify --suite minimality
//
// Exit status: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "wdf/bounds.hpp"
#include "wdf/greedy.hpp"
#include "wdf/harness.hpp"
#include "wdf/opt.hpp"
#include "wdf/workloads.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::FILE* f = std::fopen(out.c_str(), "wb");
    if (!f) throw wdf::Error(wdf::Errc::IoError, "cannot write " + out);
    std::fwrite(text.data(), 1, text.size(), f);
    std::fclose(f);
}

struct WeightFlags {
    std::string weights;
    bool equal = false;
    wdf::StartMode start = wdf::StartMode::Self;

    void attach(CLI::App* cmd)
    {
        auto* w = cmd->add_option("--weights", weights, "weights file, one positive decimal per key")
                      ->check(CLI::ExistingFile);
        auto* e = cmd->add_flag("--equal", equal, "use equal weights (default)");
        w->excludes(e);
        cmd->add_option("--start", start, "first-access convention")
            ->transform(CLI::CheckedTransformer(
                std::map<std::string, wdf::StartMode>{{"self", wdf::StartMode::Self}, {"root", wdf::StartMode::Root}}));
    }

    std::optional<wdf::WeightAssignment> load() const
    {
        if (weights.empty()) return std::nullopt;
        return wdf::read_weights(weights);
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Geometric greedy BSTs, splay baselines and the weighted dynamic finger bound"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a trace");
    std::string workload = "uniform", gen_out, gen_in;
    wdf::WorkloadSpec spec;
    gen->add_option("--workload", workload, "sequential|uniform|walk|zipf_finger|bit_reversal|trace")->required();
    gen->add_option("--n", spec.n, "number of keys");
    gen->add_option("--m", spec.m, "number of accesses");
    gen->add_option("--seed", spec.seed, "64-bit seed");
    auto* d_opt = gen->add_option("--d", spec.max_step, "walk: maximum step");
    auto* theta_opt = gen->add_option("--theta", spec.theta, "zipf_finger: step exponent");
    d_opt->excludes(theta_opt);
    gen->add_option("--in", gen_in, "trace: input trace file");
    gen->add_option("--out", gen_out, "output trace file ('-' for stdout)")->required();

    // run
    auto* run = app.add_subcommand("run", "run an algorithm and its bound; CSV i,key,cost,bound");
    std::string run_trace, run_out, run_points;
    WeightFlags run_weights;
    wdf::Algorithm algo = wdf::Algorithm::Greedy;
    wdf::InitialShape initial = wdf::InitialShape::Balanced;
    run->add_option("--trace", run_trace)->required()->check(CLI::ExistingFile);
    run->add_option("--algo", algo)->transform(CLI::CheckedTransformer(
        std::map<std::string, wdf::Algorithm>{{"greedy", wdf::Algorithm::Greedy}, {"splay", wdf::Algorithm::Splay}}));
    run->add_option("--initial", initial, "splay starting shape")
        ->transform(CLI::CheckedTransformer(std::map<std::string, wdf::InitialShape>{
            {"balanced", wdf::InitialShape::Balanced},
            {"left_spine", wdf::InitialShape::LeftSpine},
            {"right_spine", wdf::InitialShape::RightSpine}}));
    run_weights.attach(run);
    run->add_option("--points", run_points, "greedy: write touched points as CSV time,key");
    run->add_option("--out", run_out, "output CSV (default stdout)");

    // bound
    auto* bound = app.add_subcommand("bound", "weighted dynamic finger bound; CSV i,key,term");
    std::string bound_trace, bound_out;
    WeightFlags bound_weights;
    bound->add_option("--trace", bound_trace)->required()->check(CLI::ExistingFile);
    bound_weights.attach(bound);
    bound->add_option("--out", bound_out);

    // beststatic
    auto* best = app.add_subcommand("beststatic", "cheapest static finger tree (n <= 12); CSV key,parent,depth,total");
    std::string best_trace;
    best->add_option("--trace", best_trace)->required()->check(CLI::ExistingFile);

    // opt
    auto* optc = app.add_subcommand("opt", "exact optimum for n, m <= 5; CSV opt_size,greedy_size,ratio");
    std::string opt_trace;
    optc->add_option("--trace", opt_trace)->required()->check(CLI::ExistingFile);

    // fit
    auto* fitc = app.add_subcommand("fit", "fit cumulative cost against cumulative bound");
    std::string fit_cost, fit_bound;
    fitc->add_option("--cost", fit_cost, "CSV with a cost column")->required()->check(CLI::ExistingFile);
    fitc->add_option("--bound", fit_bound, "CSV with a bound or term column")->required()->check(CLI::ExistingFile);

    // verify
    auto* ver = app.add_subcommand("verify", "run a property suite");
    std::string suite = "all";
    std::uint64_t verify_seed = 1;
    ver->add_option("--suite", suite, "satisfaction|minimality|opt|depth|roundtrip|differential|all");
    ver->add_option("--seed", verify_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gen) {
            spec.kind = wdf::parse_workload_kind(workload);
            spec.trace_path = gen_in;
            if (spec.kind == wdf::WorkloadKind::ZipfFinger && !*theta_opt) spec.theta = 2.0;
            emit(wdf::format_trace(wdf::generate(spec)), gen_out);
        } else if (*run) {
            const auto seq = wdf::read_trace(run_trace);
            wdf::ExperimentOptions options;
            options.algorithm = algo;
            options.weights = run_weights.load();
            options.start = run_weights.start;
            options.initial = initial;
            options.keep_points = !run_points.empty() && algo == wdf::Algorithm::Greedy;
            const auto result = wdf::run_experiment(seq, options);
            emit(wdf::experiment_csv(seq, result), run_out);
            if (options.keep_points) emit(wdf::points_csv(result.points), run_points);
            std::cerr << fmt::format("total_cost={} total_bound={} ratio={} slope={} intercept={} r2={}\n",
                                     result.cost.total, result.bound.total, result.fit.ratio, result.fit.slope,
                                     result.fit.intercept, result.fit.r2);
        } else if (*bound) {
            const auto seq = wdf::read_trace(bound_trace);
            const auto w = bound_weights.load();
            const auto report = wdf::weighted_df_bound(seq, w ? *w : wdf::WeightAssignment::equal(seq.n()),
                                                       bound_weights.start);
            emit(wdf::bound_csv(seq, report), bound_out);
        } else if (*best) {
            const auto seq = wdf::read_trace(best_trace);
            const auto [tree, total] = wdf::best_static_finger_cost(seq);
            std::string out = "key,parent,depth,total\n";
            for (wdf::Key k = 1; k <= tree.n(); ++k)
                out += fmt::format("{},{},{},{}\n", k, tree.parent(k), tree.depth(k), total);
            emit(out, "");
        } else if (*optc) {
            const auto seq = wdf::read_trace(opt_trace);
            const auto best_set = wdf::opt_satisfied_superset(seq);
            const auto greedy = wdf::greedy_execute(seq, false).cost.total;
            emit(fmt::format("opt_size,greedy_size,ratio\n{},{},{}\n", best_set.size, greedy,
                             static_cast<double>(greedy) / static_cast<double>(best_set.size)),
                 "");
        } else if (*fitc) {
            emit(wdf::fit_csv_text(wdf::fit_csv(fit_cost, fit_bound)), "");
        } else if (*ver) {
            std::vector<wdf::Suite> suites;
            if (suite == "all") {
                for (auto s : {wdf::Suite::Satisfaction, wdf::Suite::Minimality, wdf::Suite::Opt, wdf::Suite::Depth,
                               wdf::Suite::Roundtrip, wdf::Suite::Differential})
                    suites.push_back(s);
            } else {
                suites.push_back(wdf::parse_suite(suite));
            }
            bool ok = true;
            std::string out = "suite,seed,instances,status\n";
            for (auto s : suites) {
                const auto report = wdf::verify(s, verify_seed);
                out += fmt::format("{},{},{},{}\n", wdf::to_string(s), verify_seed, report.instances,
                                   report.passed ? "pass" : "fail");
                std::cerr << wdf::to_string(s) << ": " << report.summary << "\n";
                if (!report.passed) {
                    std::cerr << wdf::to_string(s) << " counterexample: " << report.counterexample << "\n";
                    ok = false;
                }
            }
            emit(out, "");
            return ok ? 0 : kExitVerifyFailed;
        }
    } catch (const wdf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
