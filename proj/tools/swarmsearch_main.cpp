// swarmsearch command-line front end: run / sweep / alpha.

#include "swarmsearch/bench.hpp"
#include "swarmsearch/levy_theory.hpp"
#include "swarmsearch/scenario_io.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <thread>

using namespace swarmsearch;

namespace {

void add_param_options(CLI::App* cmd, ExperimentParams& p) {
    cmd->add_option("--dt", p.dt, "Tick length, s")->capture_default_str();
    cmd->add_option("--tmax", p.t_max, "Trial timeout, s")->capture_default_str();
    cmd->add_option("--alpha", p.alpha, "Levy stable exponent")->capture_default_str();
    cmd->add_option("--gamma", p.gamma, "Levy scale factor")->capture_default_str();
    cmd->add_option("--levy-n", p.levy_n, "Gaussian pairs per Levy variate")
        ->capture_default_str();
    cmd->add_option("--k", p.k, "Linear speed, m/s")->capture_default_str();
    cmd->add_option("--sigma-omega", p.sigma_omega, "Turn-rate std-dev, rad/s")
        ->capture_default_str();
    cmd->add_option("--turn-duration", p.turn_duration, "Turn phase length, s")
        ->capture_default_str();
    cmd->add_option("--fixed-duration", p.fixed_duration, "Walk length of the fixed policy, s")
        ->capture_default_str();
    cmd->add_option("--krep", p.k_rep, "Repulsion scale")->capture_default_str();
    cmd->add_option("--rho0", p.rho0, "Repulsion threshold, m")->capture_default_str();
    cmd->add_option("--rv", p.r_v, "Sensing radius, m")->capture_default_str();
    cmd->add_option("--pheromone-radius", p.pheromone_radius, "Pheromone zone radius, m")
        ->capture_default_str();
}

void print_cells(const ExperimentResult& result) {
    for (const CellStats& c : result.cells)
        std::printf("%-8s value=%-3d trials=%-3d censored=%-2d mean=%.1f s  std=%.1f  median=%.1f\n",
                    strategy_token(c.strategy), c.sweep_value, c.completion.count, c.censored,
                    c.completion.mean, c.completion.stddev, c.completion.median);
}

TrialSinkFactory event_log_factory(const std::filesystem::path& dir,
                                   std::vector<std::shared_ptr<std::ofstream>>& open_files) {
    return [&open_files, dir](const TrialRecord& rec) -> EventSink {
        char name[128];
        std::snprintf(name, sizeof(name), "events_%s_v%d_t%03d.csv",
                      strategy_token(rec.strategy), rec.sweep_value, rec.trial);
        auto out = std::make_shared<std::ofstream>(dir / name);
        if (!*out) throw std::runtime_error("cannot write event log in " + dir.string());
        *out << "time,robot,event,x,y,target\n";
        open_files.push_back(out);
        return [out](const SimEvent& e) {
            char line[160];
            std::snprintf(line, sizeof(line), "%.6f,%d,%s,%.6f,%.6f,%d\n", e.time, e.robot,
                          event_name(e.type), e.position.x, e.position.y, e.target);
            *out << line;
        };
    };
}

int run_command(const std::string& scenario_path, const std::string& strategy_name, int robots,
                int targets, int trials, std::uint64_t seed, const ExperimentParams& params,
                const std::string& out_dir, bool log_events, int workers) {
    ExperimentSpec spec;
    spec.strategies = {parse_strategy(strategy_name)};
    spec.axis = SweepAxis::Robots;
    spec.sweep_values = {robots};
    spec.n_targets = targets;
    spec.trials = trials;
    spec.master_seed = seed;
    spec.params = params;
    spec.workers = workers;
    spec.out_dir = out_dir;
    if (!scenario_path.empty()) spec.fixed_scenario = load_scenario(scenario_path);

    std::filesystem::create_directories(out_dir);
    std::vector<std::shared_ptr<std::ofstream>> logs;
    const TrialSinkFactory factory =
        log_events ? event_log_factory(out_dir, logs) : TrialSinkFactory{};
    const ExperimentResult result = run_experiment(spec, factory);
    export_results(result, out_dir);
    print_cells(result);
    std::printf("wrote %s and %s\n", (std::filesystem::path(out_dir) / "raw.csv").c_str(),
                (std::filesystem::path(out_dir) / "aggregate.csv").c_str());
    return 0;
}

int sweep_command(const std::string& spec_path, const std::string& out_override) {
    ExperimentSpec spec = load_experiment_spec(spec_path);
    if (!out_override.empty()) spec.out_dir = out_override;
    const ExperimentResult result = run_experiment(spec);
    export_results(result, spec.out_dir);
    print_cells(result);

    // pairwise comparisons per sweep point when several strategies ran
    for (int value : spec.sweep_values) {
        for (std::size_t i = 0; i < spec.strategies.size(); ++i) {
            for (std::size_t j = i + 1; j < spec.strategies.size(); ++j) {
                const auto cmp =
                    compare_strategies(result, spec.strategies[i], spec.strategies[j], value);
                const char* verdict = cmp.ordering == Ordering::AFaster   ? "a faster"
                                      : cmp.ordering == Ordering::BFaster ? "b faster"
                                                                          : "tie";
                std::printf("value=%-3d %s vs %s: U=%.1f p=%.4g -> %s\n", value,
                            strategy_token(cmp.a), strategy_token(cmp.b), cmp.test.u_a,
                            cmp.test.p_value, verdict);
            }
        }
    }
    std::printf("wrote %s and %s\n",
                (std::filesystem::path(spec.out_dir) / "raw.csv").c_str(),
                (std::filesystem::path(spec.out_dir) / "aggregate.csv").c_str());
    return 0;
}

int alpha_command(double lambda, double rv) {
    const SearchGeometry geom{lambda, rv};
    const double ratio = geom.ratio();
    const double alpha = optimal_alpha(geom);
    const double beta = 2.0 - alpha;
    std::printf("lambda/r_v   = %.6g\n", ratio);
    std::printf("beta         = %.6g\n", beta);
    std::printf("alpha_opt    = %.6g\n", alpha);
    std::printf("mean flights = %.6g  (at alpha_opt)\n", mean_flights(geom, alpha));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Levy-flight multi-robot search simulator and benchmark harness"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run trials of one strategy and export CSVs");
    std::string scenario_path, strategy_name = "levy", out_dir = "results";
    int robots = 10, targets = 8, trials = 20, workers = 1;
    std::uint64_t seed = 0;
    bool log_events = false;
    ExperimentParams run_params;
    auto* scenario_opt =
        run->add_option("--scenario", scenario_path, "Scenario file (JSON); fixes the world");
    run->add_option("--strategy", strategy_name, "fixed|levy|levy+pf")->capture_default_str();
    run->add_option("--robots", robots, "Number of robots")->capture_default_str();
    run->add_option("--targets", targets, "Number of targets (generated scenarios)")
        ->capture_default_str()
        ->excludes(scenario_opt);
    run->add_option("--trials", trials, "Trials per cell")->capture_default_str();
    run->add_option("--seed", seed, "Master seed")->capture_default_str();
    run->add_option("--out", out_dir, "Output directory")->capture_default_str();
    run->add_flag("--log-events", log_events, "Write per-trial event logs (runs sequentially)");
    run->add_option("--workers", workers, "Concurrent trial workers")->capture_default_str();
    add_param_options(run, run_params);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Run a full experiment spec (JSON)");
    std::string spec_path, sweep_out;
    sweep->add_option("--spec", spec_path, "Experiment spec file")->required();
    sweep->add_option("--out", sweep_out, "Override the spec's output directory");

    // alpha
    auto* alpha = app.add_subcommand("alpha", "Optimal Levy exponent for a search geometry");
    double lambda = 0.0, rv = 0.0;
    alpha->add_option("--lambda", lambda, "Mean distance between target sites, m")->required();
    alpha->add_option("--rv", rv, "Sensing radius, m")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed())
            return run_command(scenario_path, strategy_name, robots, targets, trials, seed,
                               run_params, out_dir, log_events, workers);
        if (sweep->parsed()) return sweep_command(spec_path, sweep_out);
        if (alpha->parsed()) return alpha_command(lambda, rv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
