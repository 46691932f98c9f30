#pragma once

#include "swarmsearch/engine.hpp"
#include "swarmsearch/stats.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace swarmsearch {

enum class Strategy { FixedLength, Levy, LevyPF };

const char* strategy_token(Strategy s);  // "fixed" | "levy" | "levy+pf"
Strategy parse_strategy(const std::string& token);

/// Numeric knobs shared by every cell of an experiment.
struct ExperimentParams {
    double dt = 0.05;
    double t_max = 20000.0;
    double alpha = 2.0;
    double gamma = 1.0;
    int levy_n = 100;
    double k = 0.6;
    double sigma_omega = 1.5707963267948966;
    double turn_duration = 1.0;
    double fixed_duration = 4.0;
    double k_rep = 1.0;
    double rho0 = 1.0;
    double r_v = 1.0;
    double pheromone_radius = 2.0;
    double arena_width = 20.0;
    double arena_height = 20.0;
    int min_obstacles = 4;
    int max_obstacles = 8;
    double obstacle_size_min = 0.5;
    double obstacle_size_max = 2.0;
};

enum class SweepAxis { Robots, Targets };

/**
 * An experiment: strategies x sweep points x trials. For a given trial index
 * every strategy and sweep point shares the trial seed, so strategies face
 * identical environments (layout and spawn points). A fixed scenario file may
 * replace per-trial generation.
 */
struct ExperimentSpec {
    std::vector<Strategy> strategies;
    SweepAxis axis = SweepAxis::Robots;
    std::vector<int> sweep_values;
    int n_robots = 10;  // fixed value when axis == Targets
    int n_targets = 8;  // fixed value when axis == Robots
    int trials = 20;
    std::uint64_t master_seed = 0;
    ExperimentParams params;
    std::optional<Scenario> fixed_scenario;
    int workers = 1;
    std::string out_dir = "results";

    void validate() const;
    std::size_t cell_count() const { return strategies.size() * sweep_values.size(); }
    std::size_t total_trials() const { return cell_count() * static_cast<std::size_t>(trials); }
};

/// Parse an experiment spec document (JSON); schema in the README.
ExperimentSpec experiment_spec_from_json(const std::string& text);
ExperimentSpec load_experiment_spec(const std::filesystem::path& path);

struct TrialRecord {
    Strategy strategy = Strategy::Levy;
    int sweep_value = 0;
    int trial = 0;
    std::uint64_t seed = 0;
    TrialResult result;

    /// Per-trial total distance: sum over robots.
    double total_distance() const;
};

struct CellStats {
    Strategy strategy = Strategy::Levy;
    int sweep_value = 0;
    SummaryStats completion;  // over trials; censored trials contribute t_max
    int censored = 0;
    double mean_total_distance = 0.0;
};

struct ExperimentResult {
    ExperimentSpec spec;
    std::vector<TrialRecord> records;  // ordered by (strategy, sweep value, trial)
    std::vector<CellStats> cells;

    std::vector<double> completion_times(Strategy s, int sweep_value) const;
    const CellStats& cell(Strategy s, int sweep_value) const;
};

/// Seed for (master_seed, trial index); shared across strategies and sweep points.
std::uint64_t trial_seed(std::uint64_t master_seed, int trial_index);

/// Assemble the full trial config for one cell and trial index.
SimConfig make_trial_config(const ExperimentSpec& spec, Strategy strategy, int sweep_value,
                            int trial_index);

/// Per-trial event-sink factory; returning an empty sink disables logging for
/// that trial. A non-null factory forces sequential execution.
using TrialSinkFactory = std::function<EventSink(const TrialRecord&)>;

/// Run every (strategy, sweep point, trial) cell, optionally on a worker
/// pool; record and aggregation order is deterministic regardless of workers.
ExperimentResult run_experiment(const ExperimentSpec& spec,
                                const TrialSinkFactory& sink_factory = {});

enum class Ordering { AFaster, BFaster, Tie };

struct StrategyComparison {
    Strategy a = Strategy::Levy;
    Strategy b = Strategy::Levy;
    int sweep_value = 0;
    double mean_a = 0.0;
    double mean_b = 0.0;
    MannWhitneyResult test;
    Ordering ordering = Ordering::Tie;  // by mean completion time; smaller is faster
};

/// Mann-Whitney comparison of two strategies' completion times at one sweep point.
/// Throws std::invalid_argument on missing cells or mismatched trial counts.
StrategyComparison compare_strategies(const ExperimentResult& result, Strategy a, Strategy b,
                                      int sweep_value);

/// Write raw per-trial and aggregate CSVs; output is byte-identical for
/// identical inputs. Throws on I/O failure.
void export_results(const ExperimentResult& result, const std::filesystem::path& out_dir);

}  // namespace swarmsearch
