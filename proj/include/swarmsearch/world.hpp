#pragma once

#include "swarmsearch/robot.hpp"
#include "swarmsearch/vec2.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace swarmsearch {

/// Minimum robot-robot separation enforced by collision resolution, m.
inline constexpr double kMinSeparation = 1e-3;

struct Circle {
    Vec2 center;
    double radius = 0.0;
};

struct Rect {
    Vec2 min;
    Vec2 max;
};

using Obstacle = std::variant<Circle, Rect>;

bool contains(const Obstacle& obstacle, const Vec2& point);
bool overlaps(const Obstacle& a, const Obstacle& b);

struct Arena {
    double width = 20.0;
    double height = 20.0;
    std::vector<Obstacle> obstacles;

    bool in_bounds(const Vec2& p) const {
        return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
    }
    bool in_free_space(const Vec2& p) const;
    double diagonal() const;
};

struct Target {
    Vec2 position;
    double detect_radius = 1.0;     // r_v
    bool found = false;
    std::optional<double> found_time;
    double pheromone_radius = 2.0;  // wider than detect_radius once marked
};

/// Arena + targets + sensing defaults; the unit loaded from a scenario file.
struct Scenario {
    Arena arena;
    std::vector<Vec2> targets;
    double r_v = 1.0;
    double pheromone_radius = 2.0;

    void validate() const;
};

/// Knobs for random scenario generation.
struct ScenarioGenParams {
    double arena_width = 20.0;
    double arena_height = 20.0;
    int n_targets = 8;
    double r_v = 1.0;
    double pheromone_radius = 2.0;
    int min_obstacles = 4;
    int max_obstacles = 8;
    double obstacle_size_min = 0.5;  // shape extent, m
    double obstacle_size_max = 2.0;
};

/// Rejection-sample obstacles (non-overlapping, inside bounds) and targets
/// (uniform in free space, pairwise distance >= 2 r_v).
/// Throws std::runtime_error if placement is infeasible.
Scenario generate_scenario(RngStream rng, const ScenarioGenParams& params);

struct NeighborPercept {
    int id = 0;
    Vec2 relative;  // neighbor position minus robot position
};

struct PheromoneZonePercept {
    Vec2 center;
    double radius = 0.0;
    bool inside = false;  // robot currently inside the zone
    bool ahead = false;   // lookahead point inside the zone
};

struct Percepts {
    std::vector<NeighborPercept> neighbors;      // within r_v, strict
    std::vector<int> targets_in_range;           // unmarked targets within detect radius
    std::vector<PheromoneZonePercept> pheromone_zones;
    bool obstacle_ahead = false;
    bool wall_ahead = false;
};

struct WorldState {
    Arena arena;
    std::vector<Target> targets;
    std::vector<RobotState> robots;
    double sensing_radius = 1.0;  // r_v
    double avoid_distance = 0.5;  // lookahead along heading, default 0.5 r_v
    double time = 0.0;

    bool all_targets_found() const;
};

/// Percepts for one robot against the frozen snapshot. All range tests use a
/// strict less-than convention. Throws std::out_of_range for an unknown id.
Percepts sense(const WorldState& world, int robot_id);

/// Mark a target and record its discovery time; the pheromone zone is active
/// permanently afterwards. Throws std::logic_error if already marked.
void deposit_pheromone(WorldState& world, int target_id, double time);

/**
 * Enforce arena physicality on this tick's proposed states: a robot that
 * would penetrate a wall or obstacle holds its prior position; robot pairs
 * closer than kMinSeparation are pushed apart symmetrically to exactly
 * kMinSeparation (coincident pairs split along +x, lower id on the +x side).
 */
std::vector<RobotState> resolve_collisions(const WorldState& world,
                                           std::vector<RobotState> proposed);

}  // namespace swarmsearch
