#pragma once

#include "swarmsearch/robot.hpp"
#include "swarmsearch/world.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace swarmsearch {

/// Full configuration of one trial; a TrialResult is a pure function of it.
struct SimConfig {
    double dt = 0.05;        // s
    double t_max = 20000.0;  // s, censoring timeout
    StrategyConfig strategy;
    Scenario scenario;
    int n_robots = 1;
    std::uint64_t master_seed = 0;
    bool reverse_update_order = false;  // diagnostics: tick order independence

    void validate() const;
};

struct TrialResult {
    bool completed = false;
    double completion_time = 0.0;           // time last target found, or t_max if censored
    std::vector<double> per_target_times;   // discovery times, sorted non-decreasing
    std::vector<double> total_distance;     // per robot, m
    std::vector<EventCounts> event_counts;  // per robot
    double mean_nn_distance = 0.0;          // time-averaged nearest-neighbor distance
    std::int64_t ticks = 0;
    std::uint64_t scenario_hash = 0;        // layout + spawn, for environment pairing checks

    /// Compact deterministic JSON (byte-identical for identical inputs).
    std::string to_json() const;
};

struct SimEvent {
    enum class Type { Turn, Avoid, PfEnter, PfExit, Catch, Pose };
    double time = 0.0;
    int robot = 0;
    Type type = Type::Turn;
    Vec2 position;
    int target = -1;  // Catch only
};

const char* event_name(SimEvent::Type t);

using EventSink = std::function<void(const SimEvent&)>;

/// Strategy with walk-clamp placeholders resolved (d_min -> dt,
/// d_max -> arena diagonal / k).
StrategyConfig resolved_strategy(const SimConfig& config);

/// Build the initial world: targets from the scenario, robots spawned
/// uniformly in free space with uniform headings, one child stream per robot.
/// Throws std::runtime_error when placement is infeasible.
WorldState make_initial_world(const SimConfig& config);

/**
 * One two-phase step: phase A computes percepts and controller decisions for
 * every robot against the frozen snapshot; phase B integrates kinematics,
 * resolves collisions, and commits pheromone deposits (simultaneous catches
 * of one target: lowest robot id wins, the others revert and re-perceive
 * next tick).
 */
WorldState tick(const WorldState& world, const SimConfig& config, const EventSink& sink = {});

/// Run one trial to completion or t_max. Bitwise-reproducible for a fixed config.
TrialResult run_trial(const SimConfig& config, const EventSink& sink = {});

}  // namespace swarmsearch
