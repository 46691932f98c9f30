#include "swarmsearch/agent.hpp"

#include <algorithm>
#include <cmath>

namespace swarmsearch {

namespace {

void enter_turn(RobotState& s, const StrategyConfig& cfg) {
    s.omega = next_turn_rate(cfg, s.rng);
    s.phase = Phase::Turn;
    s.osc = {0, cfg.turn_duration};
    s.events.turns += 1;
}

void enter_walk(RobotState& s, const StrategyConfig& cfg) {
    s.phase = Phase::Walk;
    s.osc = {1, next_walk_duration(cfg, s.rng)};
}

bool pheromone_ahead(const Percepts& p) {
    return std::any_of(p.pheromone_zones.begin(), p.pheromone_zones.end(),
                       [](const PheromoneZonePercept& z) { return z.ahead && !z.inside; });
}

}  // namespace

Vec2 percept_repulsion(const Percepts& percepts, const PotentialParams& params) {
    Vec2 total{0.0, 0.0};
    for (const NeighborPercept& nb : percepts.neighbors)
        total += repulsive_force({0.0, 0.0}, nb.relative, params);
    return total;
}

FsmResult fsm_step(const RobotState& state, const Percepts& p, const StrategyConfig& cfg,
                   double dt) {
    RobotState s = state;
    MotionCommand cmd;

    // Transient entry states resolve within the tick.
    if (s.phase == Phase::Init) {
        // Heading was randomized at placement; pass through a zero-length Turn
        // straight into the walk cycle.
        s.phase = Phase::Turn;
        s.osc = {0, 0.0};
    } else if (s.phase == Phase::CatchTarget) {
        enter_turn(s, cfg);  // disperse
    }
    if (s.phase == Phase::Turn && s.osc.remaining <= 0.0) enter_walk(s, cfg);
    if (s.phase == Phase::PotentialFieldRoutine && p.neighbors.empty()) enter_walk(s, cfg);

    if (s.phase == Phase::Walk) {
        if (!p.targets_in_range.empty()) {
            cmd.catch_target =
                *std::min_element(p.targets_in_range.begin(), p.targets_in_range.end());
            enter_turn(s, cfg);
        } else if (!p.neighbors.empty() && cfg.potential_field) {
            const Vec2 force = percept_repulsion(p, *cfg.potential_field);
            if (force.norm_sq() > 0.0) {
                s.phase = Phase::PotentialFieldRoutine;
                s.osc = {1, 0.0};
                s.events.pf_activations += 1;
            } else {
                // Neighbors sensed but beyond rho0: same truncation as PF-off.
                cmd.avoidance = true;
                s.events.avoidances += 1;
                enter_turn(s, cfg);
            }
        } else if (!p.neighbors.empty() || p.obstacle_ahead || p.wall_ahead ||
                   pheromone_ahead(p)) {
            cmd.avoidance = true;
            s.events.avoidances += 1;
            enter_turn(s, cfg);
        } else if (s.osc.remaining <= 0.0) {
            enter_turn(s, cfg);
        } else {
            cmd.translate = true;
            cmd.speed = cfg.k;
            s.osc.advance(dt);
            return {s, cmd};
        }
    }

    if (s.phase == Phase::PotentialFieldRoutine) {
        const Vec2 force =
            cfg.potential_field ? percept_repulsion(p, *cfg.potential_field) : Vec2{0.0, 0.0};
        if (force.norm_sq() > 0.0) {
            s.theta = wrap_angle(std::atan2(force.y, force.x));
            cmd.translate = true;
            cmd.speed = std::min(cfg.k * (1.0 + cfg.pf_speed_gain * force.norm()),
                                 cfg.pf_max_speed_factor * cfg.k);
            return {s, cmd};
        }
        // All sensed neighbors beyond rho0: degrade to avoidance truncation.
        cmd.avoidance = true;
        s.events.avoidances += 1;
        enter_turn(s, cfg);
    }

    // Turn (entered above or continuing): rotate in place.
    cmd.translate = false;
    cmd.omega = s.omega;
    s.osc.advance(dt);
    return {s, cmd};
}

}  // namespace swarmsearch
