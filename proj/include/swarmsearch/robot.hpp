#pragma once

#include "swarmsearch/potential_field.hpp"
#include "swarmsearch/rng.hpp"
#include "swarmsearch/vec2.hpp"

#include <cstdint>
#include <optional>

namespace swarmsearch {

/// Controller phases. CatchTarget and Init are transient: they resolve within
/// the tick that observes them.
enum class Phase : std::uint8_t { Init, Walk, Turn, PotentialFieldRoutine, CatchTarget };

const char* phase_name(Phase p);

/// Square-wave walk control signal L(t): level 1 translates, level 0 rotates.
/// `remaining` counts down to the next edge; the controller reloads it when a
/// phase begins.
struct WalkOscillator {
    int level = 0;
    double remaining = 0.0;

    void advance(double dt) {
        remaining -= dt;
        if (remaining < 0.0) remaining = 0.0;
    }
};

/// Per-robot event tallies over a trial.
struct EventCounts {
    std::int64_t turns = 0;
    std::int64_t avoidances = 0;
    std::int64_t pf_activations = 0;
};

struct RobotState {
    int id = 0;
    Vec2 position;
    double theta = 0.0;  // heading, [-pi, pi)
    Phase phase = Phase::Init;
    WalkOscillator osc;  // osc.remaining is the current phase timer
    double omega = 0.0;  // turn rate for the current Turn phase, rad/s
    RngStream rng;

    // trial bookkeeping
    double distance_traveled = 0.0;
    EventCounts events;

    double phase_timer() const { return osc.remaining; }
};

/// What the controller asks the integrator to do this tick.
struct MotionCommand {
    bool translate = false;  // L(t)
    double speed = 0.0;      // effective linear speed when translating, m/s
    double omega = 0.0;      // turn rate when rotating, rad/s
    std::optional<int> catch_target;  // target to mark this tick
    bool avoidance = false;           // walk was truncated by an avoidance percept
};

/// Walk-length policy: Levy-distributed or constant duration.
enum class WalkPolicy : std::uint8_t { Levy, FixedLength };

/**
 * Strategy knobs for one robot controller. `potential_field` disengaged means
 * neighbor encounters degrade to plain avoidance truncation. d_min/d_max
 * clamp Levy walk durations; values <= 0 are placeholders the engine replaces
 * with dt and (arena diagonal)/k.
 */
struct StrategyConfig {
    WalkPolicy policy = WalkPolicy::Levy;
    LevyParams levy{2.0, 1.0, 100};
    double fixed_duration = 4.0;  // s, FixedLength policy
    std::optional<PotentialParams> potential_field;

    double k = 0.6;                 // linear speed, m/s
    double sigma_omega = 1.5707963267948966;  // turn-rate std-dev, rad/s
    double turn_duration = 1.0;     // s
    double d_min = 0.0;             // s, walk clamp (<= 0: engine default dt)
    double d_max = 0.0;             // s, walk clamp (<= 0: engine default diag/k)
    double pf_speed_gain = 0.5;     // speed boost per force unit in the PF routine
    double pf_max_speed_factor = 2.0;  // cap: v_max = factor * k

    void validate() const;
};

/**
 * Explicit-Euler kinematic step. translate=1: move `speed * dt` along the
 * heading, heading unchanged. translate=0: hold position, rotate by
 * state.omega * dt (wrapped to [-pi, pi)).
 */
RobotState step_kinematics(const RobotState& state, bool translate, double speed, double dt);

/// Draw the next walk duration: clamp(|levy sample| * 1 s, d_min, d_max) or
/// the fixed constant, per policy.
double next_walk_duration(const StrategyConfig& config, RngStream& rng);

/// Draw the next turn rate: sigma_omega * standard normal.
double next_turn_rate(const StrategyConfig& config, RngStream& rng);

}  // namespace swarmsearch
