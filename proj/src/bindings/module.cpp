#include "swarmsearch/agent.hpp"
#include "swarmsearch/bench.hpp"
#include "swarmsearch/engine.hpp"
#include "swarmsearch/levy_theory.hpp"
#include "swarmsearch/potential_field.hpp"
#include "swarmsearch/rng.hpp"
#include "swarmsearch/scenario_io.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace swarmsearch;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Deterministic 2D multi-robot Levy-flight search simulator";

    // stochastic
    py::class_<RngStream>(m, "RngStream")
        .def(py::init<std::uint64_t>(), py::arg("seed") = 0)
        .def_property_readonly("seed", &RngStream::seed)
        .def("child", py::overload_cast<std::uint64_t>(&RngStream::child, py::const_),
             py::arg("label"))
        .def("child_named",
             [](const RngStream& s, const std::string& label) { return s.child(label); },
             py::arg("label"));

    py::class_<LevyParams>(m, "LevyParams")
        .def(py::init([](double alpha, double gamma, int n) {
                 LevyParams p{alpha, gamma, n};
                 p.validate();
                 return p;
             }),
             py::arg("alpha") = 2.0, py::arg("gamma") = 1.0, py::arg("n") = 100)
        .def_readwrite("alpha", &LevyParams::alpha)
        .def_readwrite("gamma", &LevyParams::gamma)
        .def_readwrite("n", &LevyParams::n);

    m.def("sample_uniform", &sample_uniform, py::arg("rng"));
    m.def("sample_gaussian", &sample_gaussian, py::arg("rng"));
    m.def("box_muller", &box_muller, py::arg("u1"), py::arg("u2"));
    m.def("sample_levy", &sample_levy, py::arg("params"), py::arg("rng"));

    // levy theory
    m.def("levy_pdf", &levy_pdf, py::arg("alpha"), py::arg("gamma"), py::arg("l"));
    m.def("tail_approx", &tail_approx, py::arg("alpha"), py::arg("l"));
    m.def(
        "mean_flights",
        [](double lam, double r_v, double alpha) { return mean_flights({lam, r_v}, alpha); },
        py::arg("lam"), py::arg("r_v"), py::arg("alpha"));
    m.def(
        "optimal_alpha",
        [](double lam, double r_v) { return optimal_alpha({lam, r_v}); }, py::arg("lam"),
        py::arg("r_v"));

    // potential field
    py::class_<Vec2>(m, "Vec2")
        .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0)
        .def_readwrite("x", &Vec2::x)
        .def_readwrite("y", &Vec2::y)
        .def("norm", &Vec2::norm)
        .def("__repr__", [](const Vec2& v) {
            return "Vec2(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ")";
        });

    py::class_<PotentialParams>(m, "PotentialParams")
        .def(py::init([](double k_rep, double rho0) {
                 PotentialParams p{k_rep, rho0};
                 p.validate();
                 return p;
             }),
             py::arg("k_rep") = 1.0, py::arg("rho0") = 1.0)
        .def_readwrite("k_rep", &PotentialParams::k_rep)
        .def_readwrite("rho0", &PotentialParams::rho0);

    m.def("repulsive_potential", &repulsive_potential, py::arg("rho"), py::arg("params"));
    m.def("repulsive_force", &repulsive_force, py::arg("q"), py::arg("q_neighbor"),
          py::arg("params"));
    m.def(
        "net_repulsion",
        [](const Vec2& q, const std::vector<Vec2>& neighbors, const PotentialParams& params) {
            return net_repulsion(q, neighbors, params);
        },
        py::arg("q"), py::arg("neighbors"), py::arg("params"));

    // world / scenario
    py::class_<ScenarioGenParams>(m, "ScenarioGenParams")
        .def(py::init<>())
        .def_readwrite("arena_width", &ScenarioGenParams::arena_width)
        .def_readwrite("arena_height", &ScenarioGenParams::arena_height)
        .def_readwrite("n_targets", &ScenarioGenParams::n_targets)
        .def_readwrite("r_v", &ScenarioGenParams::r_v)
        .def_readwrite("pheromone_radius", &ScenarioGenParams::pheromone_radius)
        .def_readwrite("min_obstacles", &ScenarioGenParams::min_obstacles)
        .def_readwrite("max_obstacles", &ScenarioGenParams::max_obstacles);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_readwrite("r_v", &Scenario::r_v)
        .def_readwrite("pheromone_radius", &Scenario::pheromone_radius)
        .def_property_readonly("n_targets",
                               [](const Scenario& s) { return s.targets.size(); })
        .def("to_json", &scenario_to_json)
        .def_static("from_json", &scenario_from_json, py::arg("text"))
        .def("validate", &Scenario::validate);

    m.def("generate_scenario",
          [](std::uint64_t seed, const ScenarioGenParams& params) {
              return generate_scenario(RngStream(seed), params);
          },
          py::arg("seed"), py::arg("params"));
    m.def("load_scenario", &load_scenario, py::arg("path"));
    m.def("save_scenario", &save_scenario, py::arg("scenario"), py::arg("path"));

    // agent / engine
    py::enum_<WalkPolicy>(m, "WalkPolicy")
        .value("LEVY", WalkPolicy::Levy)
        .value("FIXED_LENGTH", WalkPolicy::FixedLength);

    py::class_<StrategyConfig>(m, "StrategyConfig")
        .def(py::init<>())
        .def_readwrite("policy", &StrategyConfig::policy)
        .def_readwrite("levy", &StrategyConfig::levy)
        .def_readwrite("fixed_duration", &StrategyConfig::fixed_duration)
        .def_readwrite("potential_field", &StrategyConfig::potential_field)
        .def_readwrite("k", &StrategyConfig::k)
        .def_readwrite("sigma_omega", &StrategyConfig::sigma_omega)
        .def_readwrite("turn_duration", &StrategyConfig::turn_duration)
        .def_readwrite("d_min", &StrategyConfig::d_min)
        .def_readwrite("d_max", &StrategyConfig::d_max);

    py::class_<EventCounts>(m, "EventCounts")
        .def_readonly("turns", &EventCounts::turns)
        .def_readonly("avoidances", &EventCounts::avoidances)
        .def_readonly("pf_activations", &EventCounts::pf_activations);

    py::class_<SimConfig>(m, "SimConfig")
        .def(py::init<>())
        .def_readwrite("dt", &SimConfig::dt)
        .def_readwrite("t_max", &SimConfig::t_max)
        .def_readwrite("strategy", &SimConfig::strategy)
        .def_readwrite("scenario", &SimConfig::scenario)
        .def_readwrite("n_robots", &SimConfig::n_robots)
        .def_readwrite("master_seed", &SimConfig::master_seed)
        .def("validate", &SimConfig::validate);

    py::class_<TrialResult>(m, "TrialResult")
        .def_readonly("completed", &TrialResult::completed)
        .def_readonly("completion_time", &TrialResult::completion_time)
        .def_readonly("per_target_times", &TrialResult::per_target_times)
        .def_readonly("total_distance", &TrialResult::total_distance)
        .def_readonly("event_counts", &TrialResult::event_counts)
        .def_readonly("mean_nn_distance", &TrialResult::mean_nn_distance)
        .def_readonly("ticks", &TrialResult::ticks)
        .def_readonly("scenario_hash", &TrialResult::scenario_hash)
        .def("to_json", &TrialResult::to_json);

    m.def(
        "run_trial", [](const SimConfig& config) { return run_trial(config); },
        py::arg("config"), py::call_guard<py::gil_scoped_release>());

    // bench
    py::enum_<Strategy>(m, "Strategy")
        .value("FIXED_LENGTH", Strategy::FixedLength)
        .value("LEVY", Strategy::Levy)
        .value("LEVY_PF", Strategy::LevyPF);

    py::enum_<SweepAxis>(m, "SweepAxis")
        .value("ROBOTS", SweepAxis::Robots)
        .value("TARGETS", SweepAxis::Targets);

    py::class_<ExperimentParams>(m, "ExperimentParams")
        .def(py::init<>())
        .def_readwrite("dt", &ExperimentParams::dt)
        .def_readwrite("t_max", &ExperimentParams::t_max)
        .def_readwrite("alpha", &ExperimentParams::alpha)
        .def_readwrite("gamma", &ExperimentParams::gamma)
        .def_readwrite("levy_n", &ExperimentParams::levy_n)
        .def_readwrite("k", &ExperimentParams::k)
        .def_readwrite("sigma_omega", &ExperimentParams::sigma_omega)
        .def_readwrite("turn_duration", &ExperimentParams::turn_duration)
        .def_readwrite("fixed_duration", &ExperimentParams::fixed_duration)
        .def_readwrite("k_rep", &ExperimentParams::k_rep)
        .def_readwrite("rho0", &ExperimentParams::rho0)
        .def_readwrite("r_v", &ExperimentParams::r_v)
        .def_readwrite("pheromone_radius", &ExperimentParams::pheromone_radius)
        .def_readwrite("arena_width", &ExperimentParams::arena_width)
        .def_readwrite("arena_height", &ExperimentParams::arena_height)
        .def_readwrite("min_obstacles", &ExperimentParams::min_obstacles)
        .def_readwrite("max_obstacles", &ExperimentParams::max_obstacles);

    py::class_<ExperimentSpec>(m, "ExperimentSpec")
        .def(py::init<>())
        .def_readwrite("strategies", &ExperimentSpec::strategies)
        .def_readwrite("axis", &ExperimentSpec::axis)
        .def_readwrite("sweep_values", &ExperimentSpec::sweep_values)
        .def_readwrite("n_robots", &ExperimentSpec::n_robots)
        .def_readwrite("n_targets", &ExperimentSpec::n_targets)
        .def_readwrite("trials", &ExperimentSpec::trials)
        .def_readwrite("master_seed", &ExperimentSpec::master_seed)
        .def_readwrite("params", &ExperimentSpec::params)
        .def_readwrite("fixed_scenario", &ExperimentSpec::fixed_scenario)
        .def_readwrite("workers", &ExperimentSpec::workers)
        .def_readwrite("out_dir", &ExperimentSpec::out_dir)
        .def("total_trials", &ExperimentSpec::total_trials)
        .def("cell_count", &ExperimentSpec::cell_count)
        .def_static("from_json", &experiment_spec_from_json, py::arg("text"));

    py::class_<SummaryStats>(m, "SummaryStats")
        .def_readonly("count", &SummaryStats::count)
        .def_readonly("mean", &SummaryStats::mean)
        .def_readonly("stddev", &SummaryStats::stddev)
        .def_readonly("median", &SummaryStats::median)
        .def_readonly("min", &SummaryStats::min)
        .def_readonly("max", &SummaryStats::max);

    py::class_<TrialRecord>(m, "TrialRecord")
        .def_readonly("strategy", &TrialRecord::strategy)
        .def_readonly("sweep_value", &TrialRecord::sweep_value)
        .def_readonly("trial", &TrialRecord::trial)
        .def_readonly("seed", &TrialRecord::seed)
        .def_readonly("result", &TrialRecord::result)
        .def("total_distance", &TrialRecord::total_distance);

    py::class_<CellStats>(m, "CellStats")
        .def_readonly("strategy", &CellStats::strategy)
        .def_readonly("sweep_value", &CellStats::sweep_value)
        .def_readonly("completion", &CellStats::completion)
        .def_readonly("censored", &CellStats::censored)
        .def_readonly("mean_total_distance", &CellStats::mean_total_distance);

    py::class_<MannWhitneyResult>(m, "MannWhitneyResult")
        .def_readonly("u_a", &MannWhitneyResult::u_a)
        .def_readonly("u_b", &MannWhitneyResult::u_b)
        .def_readonly("z", &MannWhitneyResult::z)
        .def_readonly("p_value", &MannWhitneyResult::p_value);

    py::enum_<Ordering>(m, "Ordering")
        .value("A_FASTER", Ordering::AFaster)
        .value("B_FASTER", Ordering::BFaster)
        .value("TIE", Ordering::Tie);

    py::class_<StrategyComparison>(m, "StrategyComparison")
        .def_readonly("a", &StrategyComparison::a)
        .def_readonly("b", &StrategyComparison::b)
        .def_readonly("sweep_value", &StrategyComparison::sweep_value)
        .def_readonly("mean_a", &StrategyComparison::mean_a)
        .def_readonly("mean_b", &StrategyComparison::mean_b)
        .def_readonly("test", &StrategyComparison::test)
        .def_readonly("ordering", &StrategyComparison::ordering);

    py::class_<ExperimentResult>(m, "ExperimentResult")
        .def_readonly("records", &ExperimentResult::records)
        .def_readonly("cells", &ExperimentResult::cells)
        .def("completion_times", &ExperimentResult::completion_times, py::arg("strategy"),
             py::arg("sweep_value"));

    m.def(
        "run_experiment", [](const ExperimentSpec& spec) { return run_experiment(spec); },
        py::arg("spec"), py::call_guard<py::gil_scoped_release>());
    m.def("compare_strategies", &compare_strategies, py::arg("result"), py::arg("a"),
          py::arg("b"), py::arg("sweep_value"));
    m.def("export_results", &export_results, py::arg("result"), py::arg("out_dir"));
    m.def("mann_whitney_u",
          [](const std::vector<double>& a, const std::vector<double>& b) {
              return mann_whitney_u(a, b);
          },
          py::arg("a"), py::arg("b"));
    m.def("sign_test_p", &sign_test_p, py::arg("positives"), py::arg("n"));

    m.attr("__version__") = "0.1.0";
}
