// Acceptance suite: one check per shipped claim, one PASS/FAIL line each.
// Usage: swarmsearch_acceptance [criterion ...]   (default: all)

#include "swarmsearch/agent.hpp"
#include "swarmsearch/bench.hpp"
#include "swarmsearch/engine.hpp"
#include "swarmsearch/levy_theory.hpp"
#include "swarmsearch/potential_field.hpp"
#include "swarmsearch/rng.hpp"

#include "support/stat_oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace swarmsearch;

namespace {

struct Check {
    int id;
    const char* name;
    std::function<bool(std::ostream&)> run;
};

ExperimentSpec protocol_spec(std::vector<Strategy> strategies, std::vector<int> robot_counts,
                             int trials, std::uint64_t seed) {
    ExperimentSpec spec;
    spec.strategies = std::move(strategies);
    spec.axis = SweepAxis::Robots;
    spec.sweep_values = std::move(robot_counts);
    spec.n_targets = 8;
    spec.trials = trials;
    spec.master_seed = seed;
    spec.workers = 2;
    return spec;
}

// --- criterion 1: levy sampler at alpha = 1 is standard Cauchy -------------

bool c1_cauchy_ks(std::ostream& log) {
    const LevyParams params{1.0, 1.0, 100};
    RngStream rng(0xACCE5501);
    std::vector<double> z(100000);
    for (auto& v : z) v = sample_levy(params, rng);
    const double d = oracles::ks_distance(z, oracles::std_cauchy_cdf);
    log << "KS distance to standard Cauchy = " << d << " (< 0.02)";
    return d < 0.02;
}

// --- criterion 2: survival-function tail exponent at alpha = 1.5 -----------

bool c2_tail_slope(std::ostream& log) {
    const LevyParams params{1.5, 1.0, 100};
    RngStream rng(0xACCE5502);
    std::vector<double> mags(1000000);
    for (auto& v : mags) v = std::fabs(sample_levy(params, rng));
    const double slope = oracles::survival_tail_slope(mags);
    log << "tail slope = " << slope << " (-1.5 +/- 0.15)";
    return std::fabs(slope + 1.5) < 0.15;
}

// --- criterion 3: levy_pdf closed forms and normalization -------------------

bool c3_pdf_closed_forms(std::ostream& log) {
    double worst_cauchy = 0.0, worst_gauss = 0.0;
    for (double l = -10.0; l <= 10.0 + 1e-12; l += 0.25) {
        const double cauchy = (1.0 / oracles::kPi) / (1.0 + l * l);
        worst_cauchy = std::max(worst_cauchy, std::fabs(levy_pdf(1.0, 1.0, l) - cauchy));
        const double gauss = std::exp(-l * l / 4.0) / (2.0 * std::sqrt(oracles::kPi));
        worst_gauss = std::max(worst_gauss, std::fabs(levy_pdf(2.0, 1.0, l) - gauss));
    }

    double worst_norm = 0.0;
    for (double alpha : {1.0, 1.5, 2.0}) {
        const auto f = [alpha](double l) { return levy_pdf(alpha, 1.0, l); };
        const double body = 2.0 * oracles::adaptive_simpson(f, 0.0, 50.0, 1e-6);
        const double tail = 2.0 * std::tgamma(alpha + 1.0) *
                            std::sin(oracles::kPi * alpha / 2.0) /
                            (oracles::kPi * alpha * std::pow(50.0, alpha));
        worst_norm = std::max(worst_norm, std::fabs(body + tail - 1.0));
    }
    log << "max |pdf - closed form|: cauchy " << worst_cauchy << ", gauss " << worst_gauss
        << " (< 1e-6); |norm - 1| " << worst_norm << " (< 1e-4)";
    return worst_cauchy < 1e-6 && worst_gauss < 1e-6 && worst_norm < 1e-4;
}

// --- criterion 4: optimal-alpha and mean-flights formulas ------------------

bool c4_search_formulas(std::ostream& log) {
    const double a_e = optimal_alpha({std::exp(1.0), 1.0});
    const double n_100 = mean_flights({100.0, 1.0}, 2.0);
    bool monotone = true;
    double prev = optimal_alpha({2.0, 1.0});
    for (double ratio = 2.0 * 1.02; ratio <= 1e6; ratio *= 1.02) {
        const double a = optimal_alpha({ratio, 1.0});
        if (a <= prev || a >= 2.0) monotone = false;
        prev = a;
    }
    log << "alpha(e) = " << a_e << " (= 1), N(alpha=2, ratio=100) = " << n_100
        << " (= 10), monotone over [2, 1e6]: " << (monotone ? "yes" : "no");
    return std::fabs(a_e - 1.0) < 1e-12 && std::fabs(n_100 - 10.0) < 1e-12 && monotone;
}

// --- criterion 5: force law point checks and gradient consistency ----------

bool c5_force_law(std::ostream& log) {
    bool ok = true;
    {
        const PotentialParams p{1.0, 2.0};
        const Vec2 f = repulsive_force({0.0, 0.0}, {1.0, 0.0}, p);
        ok = ok && std::fabs(f.x + 0.5) < 1e-12 && std::fabs(f.y) < 1e-12;
        ok = ok && repulsive_force({0.0, 0.0}, {2.0, 0.0}, p).norm() == 0.0;
        ok = ok && repulsive_force({0.0, 0.0}, {5.0, 0.0}, p).norm() == 0.0;
    }
    {
        const PotentialParams p{2.0, 1.0};
        const Vec2 f = repulsive_force({0.0, 0.0}, {0.0, -0.5}, p);
        ok = ok && std::fabs(f.x) < 1e-12 && std::fabs(f.y - 8.0) < 1e-12;
    }

    // antisymmetry on random pairs
    RngStream rng(0xACCE5505);
    const PotentialParams p{1.3, 2.2};
    for (int i = 0; i < 200; ++i) {
        const Vec2 a{3.0 * sample_uniform(rng), 3.0 * sample_uniform(rng)};
        const Vec2 b{3.0 * sample_uniform(rng), 3.0 * sample_uniform(rng)};
        if (distance(a, b) < 1e-6) continue;
        const Vec2 fab = repulsive_force(a, b, p);
        const Vec2 fba = repulsive_force(b, a, p);
        ok = ok && std::fabs(fab.x + fba.x) < 1e-12 && std::fabs(fab.y + fba.y) < 1e-12;
    }

    // finite differences against the potential the force law integrates to
    const auto potential = [&p](const Vec2& q, const Vec2& nb) {
        const double rho = distance(q, nb);
        if (rho >= p.rho0) return 0.0;
        const double d = 1.0 / rho - 1.0 / p.rho0;
        return 0.5 * p.k_rep * d * d;
    };
    const double h = 1e-6 * p.rho0;
    double worst_rel = 0.0;
    const Vec2 nb{0.0, 0.0};
    for (double rho : {0.3, 0.9, 1.5, 2.1}) {
        const Vec2 q{rho * 0.28, rho * 0.96};
        const Vec2 f = repulsive_force(q, nb, p);
        const double gx = (potential({q.x + h, q.y}, nb) - potential({q.x - h, q.y}, nb)) / (2 * h);
        const double gy = (potential({q.x, q.y + h}, nb) - potential({q.x, q.y - h}, nb)) / (2 * h);
        const double rel = std::hypot(f.x + gx, f.y + gy) / std::max(1e-30, f.norm());
        worst_rel = std::max(worst_rel, rel);
    }
    log << "point checks exact to 1e-12, gradient consistency worst rel err = " << worst_rel
        << " (< 1e-5)";
    return ok && worst_rel < 1e-5;
}

// --- criterion 6: trial determinism -----------------------------------------

bool c6_determinism(std::ostream& log) {
    ExperimentSpec spec = protocol_spec({Strategy::LevyPF}, {10}, 1, 0xD5EED);
    const SimConfig config = make_trial_config(spec, Strategy::LevyPF, 10, 0);
    const std::string a = run_trial(config).to_json();
    const std::string b = run_trial(config).to_json();
    SimConfig reversed = config;
    reversed.reverse_update_order = true;
    const std::string c = run_trial(reversed).to_json();
    log << "rerun byte-identical: " << (a == b ? "yes" : "no")
        << ", reversed robot order identical: " << (a == c ? "yes" : "no");
    return a == b && a == c;
}

// --- criterion 7: strategy ordering (L+P < L < FL) ---------------------------

struct OrderingOutcome {
    bool ordering = false;
    bool sig_l_fl = false;
    bool sig_lp_fl = false;
    bool sig_lp_l = false;
    std::string detail;
};

OrderingOutcome ordering_at(int trials, std::uint64_t seed) {
    const ExperimentSpec spec = protocol_spec(
        {Strategy::LevyPF, Strategy::Levy, Strategy::FixedLength}, {10}, trials, seed);
    const ExperimentResult result = run_experiment(spec);
    const double t_lp = result.cell(Strategy::LevyPF, 10).completion.mean;
    const double t_l = result.cell(Strategy::Levy, 10).completion.mean;
    const double t_fl = result.cell(Strategy::FixedLength, 10).completion.mean;
    const auto p_l_fl = compare_strategies(result, Strategy::Levy, Strategy::FixedLength, 10);
    const auto p_lp_fl = compare_strategies(result, Strategy::LevyPF, Strategy::FixedLength, 10);
    const auto p_lp_l = compare_strategies(result, Strategy::LevyPF, Strategy::Levy, 10);

    OrderingOutcome o;
    o.ordering = t_lp < t_l && t_l < t_fl;
    o.sig_l_fl = p_l_fl.test.p_value < 0.05 && p_l_fl.ordering == Ordering::AFaster;
    o.sig_lp_fl = p_lp_fl.test.p_value < 0.05 && p_lp_fl.ordering == Ordering::AFaster;
    o.sig_lp_l = p_lp_l.test.p_value < 0.05 && p_lp_l.ordering == Ordering::AFaster;
    std::ostringstream ss;
    ss << "mean T: L+P " << t_lp << ", L " << t_l << ", FL " << t_fl << "; p(L,FL) "
       << p_l_fl.test.p_value << ", p(L+P,FL) " << p_lp_fl.test.p_value << ", p(L+P,L) "
       << p_lp_l.test.p_value << " @" << trials << " trials";
    o.detail = ss.str();
    return o;
}

bool c7_strategy_ordering(std::ostream& log) {
    const OrderingOutcome at20 = ordering_at(20, 0xF16801);
    log << at20.detail;
    if (at20.ordering && at20.sig_l_fl && at20.sig_lp_fl && at20.sig_lp_l) return true;
    if (!(at20.ordering && at20.sig_l_fl && at20.sig_lp_fl)) return false;
    // L+P vs L short of significance at 20 trials: decide at 100
    const OrderingOutcome at100 = ordering_at(100, 0xF16801);
    log << " | retry: " << at100.detail;
    return at100.ordering && at100.sig_l_fl && at100.sig_lp_fl;
}

// --- criterion 8: saturation of adding robots --------------------------------

bool c8_saturation(std::ostream& log) {
    const ExperimentSpec spec =
        protocol_spec({Strategy::Levy}, {5, 10, 20, 40}, 20, 0xF16901);
    const ExperimentResult result = run_experiment(spec);
    const double t5 = result.cell(Strategy::Levy, 5).completion.mean;
    const double t10 = result.cell(Strategy::Levy, 10).completion.mean;
    const double t20 = result.cell(Strategy::Levy, 20).completion.mean;
    const double t40 = result.cell(Strategy::Levy, 40).completion.mean;
    const double early = (t5 - t10) / t5;
    const double late = (t20 - t40) / t20;
    log << "mean T at 5/10/20/40 robots: " << t5 << "/" << t10 << "/" << t20 << "/" << t40
        << "; relative reduction 5->10 = " << early << ", 20->40 = " << late;
    return late < early;
}

// --- criterion 9: the potential field disperses the swarm --------------------

bool c9_dispersion(std::ostream& log) {
    const ExperimentSpec spec =
        protocol_spec({Strategy::Levy, Strategy::LevyPF}, {10}, 20, 0xD15BE5);
    const ExperimentResult result = run_experiment(spec);
    int positives = 0, nonzero = 0;
    double mean_on = 0.0, mean_off = 0.0;
    for (int t = 0; t < spec.trials; ++t) {
        double on = 0.0, off = 0.0;
        for (const TrialRecord& rec : result.records) {
            if (rec.trial != t) continue;
            (rec.strategy == Strategy::LevyPF ? on : off) = rec.result.mean_nn_distance;
        }
        mean_on += on;
        mean_off += off;
        if (on != off) {
            ++nonzero;
            if (on > off) ++positives;
        }
    }
    mean_on /= spec.trials;
    mean_off /= spec.trials;
    const double p = sign_test_p(positives, nonzero);
    log << "mean NN distance: PF on " << mean_on << ", off " << mean_off << "; " << positives
        << "/" << nonzero << " pairs larger, sign test p = " << p;
    return mean_on > mean_off && p < 0.05;
}

// --- criterion 10: engine invariants ------------------------------------------

bool c10_engine_invariants(std::ostream& log) {
    // stress world: 20 robots, obstacle-rich, no targets so the run never ends
    ScenarioGenParams gen;
    gen.n_targets = 0;
    gen.min_obstacles = 8;
    gen.max_obstacles = 8;
    SimConfig config;
    config.scenario = generate_scenario(RngStream(0xE16), gen);
    config.n_robots = 20;
    config.master_seed = 0xE17;
    config.strategy.potential_field = PotentialParams{1.0, 1.0};

    WorldState world = make_initial_world(config);
    std::vector<double> integrated(world.robots.size(), 0.0);
    long penetrations = 0;
    for (int i = 0; i < 100000; ++i) {
        const WorldState next = tick(world, config);
        for (std::size_t r = 0; r < world.robots.size(); ++r) {
            integrated[r] += distance(next.robots[r].position, world.robots[r].position);
            if (!next.arena.in_bounds(next.robots[r].position)) ++penetrations;
            for (const Obstacle& o : next.arena.obstacles)
                if (contains(o, next.robots[r].position)) ++penetrations;
        }
        world = next;
    }
    double worst_rel = 0.0;
    for (std::size_t r = 0; r < world.robots.size(); ++r) {
        const double rel = std::fabs(world.robots[r].distance_traveled - integrated[r]) /
                           std::max(1e-30, integrated[r]);
        worst_rel = std::max(worst_rel, rel);
    }

    // FSM totality over every phase x percept-flag combination
    bool total = true;
    const Phase phases[] = {Phase::Init, Phase::Walk, Phase::Turn,
                            Phase::PotentialFieldRoutine, Phase::CatchTarget};
    for (bool pf_on : {false, true}) {
        StrategyConfig cfg;
        cfg.d_min = 0.05;
        cfg.d_max = 47.0;
        if (pf_on) cfg.potential_field = PotentialParams{1.0, 1.0};
        for (Phase phase : phases) {
            for (int mask = 0; mask < 32; ++mask) {
                for (bool expired : {false, true}) {
                    Percepts p;
                    if (mask & 1) p.targets_in_range = {0};
                    if (mask & 2) p.neighbors.push_back({1, {0.4, 0.1}});
                    if (mask & 4) p.obstacle_ahead = true;
                    if (mask & 8) p.wall_ahead = true;
                    if (mask & 16) p.pheromone_zones.push_back({{5.5, 5.0}, 2.0, false, true});
                    RobotState r;
                    r.position = {5.0, 5.0};
                    r.phase = phase;
                    r.osc = {phase == Phase::Turn ? 0 : 1, expired ? 0.0 : 2.0};
                    r.rng = RngStream(9);
                    const auto [next, cmd] = fsm_step(r, p, cfg, 0.05);
                    const auto [next2, cmd2] = fsm_step(r, p, cfg, 0.05);
                    if (static_cast<int>(next.phase) > 4 || next.phase != next2.phase ||
                        cmd.translate != cmd2.translate || next.phase_timer() < 0.0)
                        total = false;
                }
            }
        }
    }

    log << "penetrations over 1e5 ticks: " << penetrations
        << "; distance conservation worst rel err = " << worst_rel
        << " (< 1e-9); FSM totality: " << (total ? "pass" : "fail");
    return penetrations == 0 && worst_rel < 1e-9 && total;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Check> checks = {
        {1, "levy sampler alpha=1 matches the standard Cauchy law", c1_cauchy_ks},
        {2, "levy sampler alpha=1.5 survival tail exponent", c2_tail_slope},
        {3, "levy pdf closed-form reductions and normalization", c3_pdf_closed_forms},
        {4, "optimal-alpha and mean-flights formulas", c4_search_formulas},
        {5, "repulsive force law point checks and gradient consistency", c5_force_law},
        {6, "trial determinism and update-order independence", c6_determinism},
        {7, "strategy ordering L+P < L < FL at 10 robots, 8 targets", c7_strategy_ordering},
        {8, "adding robots saturates (5->10 beats 20->40)", c8_saturation},
        {9, "potential field increases nearest-neighbor distance", c9_dispersion},
        {10, "engine invariants: penetration, conservation, FSM totality", c10_engine_invariants},
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const Check& check : checks) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), check.id) == selected.end())
            continue;
        const auto start = std::chrono::steady_clock::now();
        std::ostringstream detail;
        bool pass = false;
        try {
            pass = check.run(detail);
        } catch (const std::exception& e) {
            detail << "exception: " << e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2d %s  %s  (%s)  [%.1f s]\n", check.id,
                    pass ? "PASS" : "FAIL", check.name, detail.str().c_str(), secs);
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    return failures;
}
