#pragma once

#include "swarmsearch/robot.hpp"
#include "swarmsearch/world.hpp"

namespace swarmsearch {

struct FsmResult {
    RobotState state;
    MotionCommand command;
};

/**
 * One controller step for one robot against this tick's frozen percepts.
 *
 * Transition priority from Walk: unmarked target in range wins (CatchTarget,
 * then disperse via Turn); then neighbor in range (PotentialFieldRoutine when
 * the field is on and the net repulsion is nonzero, plain truncation
 * otherwise); then avoidance truncation on wall/obstacle/pheromone-zone
 * lookahead; then timer expiry into Turn. Turn expiry re-enters Walk with a
 * fresh duration; the PotentialFieldRoutine steers along the net repulsion at
 * a boosted, capped speed and exits once no neighbor is sensed.
 *
 * Init and CatchTarget are transient and resolve within the tick, so a robot
 * spawned next to a target can mark it on the first tick.
 *
 * Draws randomness only from state.rng; total over every (phase, percepts)
 * combination.
 */
FsmResult fsm_step(const RobotState& state, const Percepts& percepts,
                   const StrategyConfig& config, double dt);

/// Net repulsion at the robot's origin from neighbor percepts (relative positions).
Vec2 percept_repulsion(const Percepts& percepts, const PotentialParams& params);

}  // namespace swarmsearch
