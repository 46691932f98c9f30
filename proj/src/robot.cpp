#include "swarmsearch/robot.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swarmsearch {

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Init: return "init";
        case Phase::Walk: return "walk";
        case Phase::Turn: return "turn";
        case Phase::PotentialFieldRoutine: return "pf";
        case Phase::CatchTarget: return "catch";
    }
    return "?";
}

void StrategyConfig::validate() const {
    if (policy == WalkPolicy::Levy) levy.validate();
    if (policy == WalkPolicy::FixedLength && !(fixed_duration > 0.0))
        throw std::invalid_argument("StrategyConfig: fixed_duration must be > 0");
    if (potential_field) potential_field->validate();
    if (!(k > 0.0)) throw std::invalid_argument("StrategyConfig: k must be > 0");
    if (!(sigma_omega > 0.0)) throw std::invalid_argument("StrategyConfig: sigma_omega must be > 0");
    if (!(turn_duration > 0.0)) throw std::invalid_argument("StrategyConfig: turn_duration must be > 0");
    if (d_min > 0.0 && d_max > 0.0 && d_min > d_max)
        throw std::invalid_argument("StrategyConfig: d_min must be <= d_max");
}

RobotState step_kinematics(const RobotState& state, bool translate, double speed, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("step_kinematics: dt must be > 0");
    RobotState next = state;
    if (translate) {
        next.position.x += speed * std::cos(state.theta) * dt;
        next.position.y += speed * std::sin(state.theta) * dt;
    } else {
        next.theta = wrap_angle(state.theta + state.omega * dt);
    }
    return next;
}

double next_walk_duration(const StrategyConfig& config, RngStream& rng) {
    if (config.policy == WalkPolicy::FixedLength) return config.fixed_duration;
    const double raw = std::fabs(sample_levy(config.levy, rng));  // 1 second per unit
    return std::clamp(raw, config.d_min, config.d_max);
}

double next_turn_rate(const StrategyConfig& config, RngStream& rng) {
    return config.sigma_omega * sample_gaussian(rng);
}

}  // namespace swarmsearch
