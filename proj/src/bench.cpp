#include "swarmsearch/bench.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace swarmsearch {

namespace {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

const char* strategy_token(Strategy s) {
    switch (s) {
        case Strategy::FixedLength: return "fixed";
        case Strategy::Levy: return "levy";
        case Strategy::LevyPF: return "levy+pf";
    }
    return "?";
}

Strategy parse_strategy(const std::string& token) {
    if (token == "fixed" || token == "FL") return Strategy::FixedLength;
    if (token == "levy" || token == "L") return Strategy::Levy;
    if (token == "levy+pf" || token == "L+P") return Strategy::LevyPF;
    throw std::invalid_argument("unknown strategy '" + token + "' (fixed|levy|levy+pf)");
}

void ExperimentSpec::validate() const {
    if (strategies.empty()) throw std::invalid_argument("ExperimentSpec: no strategies");
    if (sweep_values.empty()) throw std::invalid_argument("ExperimentSpec: empty sweep");
    if (trials < 1) throw std::invalid_argument("ExperimentSpec: trials must be >= 1");
    if (n_robots < 1) throw std::invalid_argument("ExperimentSpec: n_robots must be >= 1");
    if (n_targets < 0) throw std::invalid_argument("ExperimentSpec: n_targets must be >= 0");
    if (workers < 1) throw std::invalid_argument("ExperimentSpec: workers must be >= 1");
    for (int v : sweep_values)
        if (v < (axis == SweepAxis::Robots ? 1 : 0))
            throw std::invalid_argument("ExperimentSpec: bad sweep value");
    if (fixed_scenario) fixed_scenario->validate();
}

double TrialRecord::total_distance() const {
    double sum = 0.0;
    for (double d : result.total_distance) sum += d;
    return sum;
}

std::uint64_t trial_seed(std::uint64_t master_seed, int trial_index) {
    return RngStream::derive(master_seed, static_cast<std::uint64_t>(trial_index));
}

SimConfig make_trial_config(const ExperimentSpec& spec, Strategy strategy, int sweep_value,
                            int trial_index) {
    const ExperimentParams& p = spec.params;
    const int robots = spec.axis == SweepAxis::Robots ? sweep_value : spec.n_robots;
    const int targets = spec.axis == SweepAxis::Targets ? sweep_value : spec.n_targets;

    SimConfig config;
    config.dt = p.dt;
    config.t_max = p.t_max;
    config.n_robots = robots;
    config.master_seed = trial_seed(spec.master_seed, trial_index);

    StrategyConfig& s = config.strategy;
    s.policy = strategy == Strategy::FixedLength ? WalkPolicy::FixedLength : WalkPolicy::Levy;
    s.levy = {p.alpha, p.gamma, p.levy_n};
    s.fixed_duration = p.fixed_duration;
    if (strategy == Strategy::LevyPF) s.potential_field = PotentialParams{p.k_rep, p.rho0};
    s.k = p.k;
    s.sigma_omega = p.sigma_omega;
    s.turn_duration = p.turn_duration;

    if (spec.fixed_scenario) {
        config.scenario = *spec.fixed_scenario;
    } else {
        ScenarioGenParams gen;
        gen.arena_width = p.arena_width;
        gen.arena_height = p.arena_height;
        gen.n_targets = targets;
        gen.r_v = p.r_v;
        gen.pheromone_radius = p.pheromone_radius;
        gen.min_obstacles = p.min_obstacles;
        gen.max_obstacles = p.max_obstacles;
        gen.obstacle_size_min = p.obstacle_size_min;
        gen.obstacle_size_max = p.obstacle_size_max;
        config.scenario =
            generate_scenario(RngStream(config.master_seed).child("scenario"), gen);
    }
    return config;
}

ExperimentResult run_experiment(const ExperimentSpec& spec, const TrialSinkFactory& sink_factory) {
    spec.validate();
    ExperimentResult result;
    result.spec = spec;

    for (Strategy s : spec.strategies)
        for (int value : spec.sweep_values)
            for (int t = 0; t < spec.trials; ++t)
                result.records.push_back({s, value, t, trial_seed(spec.master_seed, t), {}});

    std::atomic<std::size_t> cursor{0};
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= result.records.size()) return;
            TrialRecord& rec = result.records[i];
            const SimConfig config = make_trial_config(spec, rec.strategy, rec.sweep_value, rec.trial);
            rec.result = run_trial(config, sink_factory ? sink_factory(rec) : EventSink{});
        }
    };
    const int n_workers =
        sink_factory ? 1 : std::min<int>(spec.workers, static_cast<int>(result.records.size()));
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    // Sequential reduce in record order (cell, then trial index).
    for (Strategy s : spec.strategies) {
        for (int value : spec.sweep_values) {
            CellStats cell;
            cell.strategy = s;
            cell.sweep_value = value;
            std::vector<double> times;
            double dist_sum = 0.0;
            for (const TrialRecord& rec : result.records) {
                if (rec.strategy != s || rec.sweep_value != value) continue;
                times.push_back(rec.result.completion_time);
                dist_sum += rec.total_distance();
                if (!rec.result.completed) ++cell.censored;
            }
            cell.completion = summarize(times);
            cell.mean_total_distance = dist_sum / static_cast<double>(times.size());
            result.cells.push_back(cell);
        }
    }
    return result;
}

std::vector<double> ExperimentResult::completion_times(Strategy s, int sweep_value) const {
    std::vector<double> times;
    for (const TrialRecord& rec : records)
        if (rec.strategy == s && rec.sweep_value == sweep_value)
            times.push_back(rec.result.completion_time);
    return times;
}

const CellStats& ExperimentResult::cell(Strategy s, int sweep_value) const {
    for (const CellStats& c : cells)
        if (c.strategy == s && c.sweep_value == sweep_value) return c;
    throw std::invalid_argument("ExperimentResult: no such cell");
}

StrategyComparison compare_strategies(const ExperimentResult& result, Strategy a, Strategy b,
                                      int sweep_value) {
    const std::vector<double> ta = result.completion_times(a, sweep_value);
    const std::vector<double> tb = result.completion_times(b, sweep_value);
    if (ta.empty() || tb.empty())
        throw std::invalid_argument("compare_strategies: cell not populated");
    if (ta.size() != tb.size())
        throw std::invalid_argument("compare_strategies: mismatched trial counts");

    StrategyComparison cmp;
    cmp.a = a;
    cmp.b = b;
    cmp.sweep_value = sweep_value;
    cmp.mean_a = summarize(ta).mean;
    cmp.mean_b = summarize(tb).mean;
    cmp.test = mann_whitney_u(ta, tb);
    cmp.ordering = cmp.mean_a < cmp.mean_b ? Ordering::AFaster
                                           : (cmp.mean_b < cmp.mean_a ? Ordering::BFaster
                                                                      : Ordering::Tie);
    return cmp;
}

void export_results(const ExperimentResult& result, const std::filesystem::path& out_dir) {
    result.spec.validate();
    if (result.records.empty()) throw std::invalid_argument("export_results: no trials to export");
    std::filesystem::create_directories(out_dir);

    const auto raw_path = out_dir / "raw.csv";
    std::ofstream raw(raw_path);
    if (!raw) throw std::runtime_error("cannot write " + raw_path.string());
    raw << "strategy,sweep_value,trial,seed,completed,completion_time,total_distance\n";
    for (const TrialRecord& rec : result.records) {
        raw << strategy_token(rec.strategy) << ',' << rec.sweep_value << ',' << rec.trial << ','
            << rec.seed << ',' << (rec.result.completed ? 1 : 0) << ','
            << format_double(rec.result.completion_time) << ','
            << format_double(rec.total_distance()) << '\n';
    }

    const auto agg_path = out_dir / "aggregate.csv";
    std::ofstream agg(agg_path);
    if (!agg) throw std::runtime_error("cannot write " + agg_path.string());
    agg << "strategy,sweep_value,trials,censored,mean_completion_time,std_completion_time,"
           "median_completion_time,min_completion_time,max_completion_time,mean_total_distance\n";
    for (const CellStats& c : result.cells) {
        agg << strategy_token(c.strategy) << ',' << c.sweep_value << ',' << c.completion.count
            << ',' << c.censored << ',' << format_double(c.completion.mean) << ','
            << format_double(c.completion.stddev) << ',' << format_double(c.completion.median)
            << ',' << format_double(c.completion.min) << ',' << format_double(c.completion.max)
            << ',' << format_double(c.mean_total_distance) << '\n';
    }
}

ExperimentSpec experiment_spec_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("experiment spec: ") + e.what());
    }
    ExperimentSpec spec;
    try {
        for (const json& s : j.at("strategies"))
            spec.strategies.push_back(parse_strategy(s.get<std::string>()));
        const json& sweep = j.at("sweep");
        const std::string axis = sweep.at("axis").get<std::string>();
        if (axis == "robots")
            spec.axis = SweepAxis::Robots;
        else if (axis == "targets")
            spec.axis = SweepAxis::Targets;
        else
            throw std::invalid_argument("experiment spec: axis must be robots|targets");
        for (const json& v : sweep.at("values")) spec.sweep_values.push_back(v.get<int>());
        spec.n_robots = j.value("robots", spec.n_robots);
        spec.n_targets = j.value("targets", spec.n_targets);
        spec.trials = j.value("trials", spec.trials);
        spec.master_seed = j.value("seed", spec.master_seed);
        spec.workers = j.value("workers", spec.workers);
        spec.out_dir = j.value("out", spec.out_dir);

        if (j.contains("params")) {
            const json& p = j.at("params");
            ExperimentParams& e = spec.params;
            e.dt = p.value("dt", e.dt);
            e.t_max = p.value("t_max", e.t_max);
            e.alpha = p.value("alpha", e.alpha);
            e.gamma = p.value("gamma", e.gamma);
            e.levy_n = p.value("levy_n", e.levy_n);
            e.k = p.value("k", e.k);
            e.sigma_omega = p.value("sigma_omega", e.sigma_omega);
            e.turn_duration = p.value("turn_duration", e.turn_duration);
            e.fixed_duration = p.value("fixed_duration", e.fixed_duration);
            e.k_rep = p.value("k_rep", e.k_rep);
            e.rho0 = p.value("rho0", e.rho0);
            e.r_v = p.value("r_v", e.r_v);
            e.pheromone_radius = p.value("pheromone_radius", e.pheromone_radius);
            e.arena_width = p.value("arena_width", e.arena_width);
            e.arena_height = p.value("arena_height", e.arena_height);
            e.min_obstacles = p.value("min_obstacles", e.min_obstacles);
            e.max_obstacles = p.value("max_obstacles", e.max_obstacles);
            e.obstacle_size_min = p.value("obstacle_size_min", e.obstacle_size_min);
            e.obstacle_size_max = p.value("obstacle_size_max", e.obstacle_size_max);
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("experiment spec: ") + e.what());
    }
    spec.validate();
    return spec;
}

ExperimentSpec load_experiment_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open experiment spec: " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return experiment_spec_from_json(text);
}

}  // namespace swarmsearch
