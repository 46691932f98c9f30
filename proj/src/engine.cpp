#include "swarmsearch/engine.hpp"

#include "swarmsearch/agent.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>

namespace swarmsearch {

namespace {

constexpr int kSpawnAttempts = 10000;
constexpr int kPoseIntervalTicks = 20;
constexpr double kPi = 3.14159265358979323846;

std::uint64_t hash_double(std::uint64_t h, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof(bits));
    return RngStream::mix64(h ^ bits);
}

std::uint64_t layout_hash(const WorldState& world) {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL;
    h = hash_double(h, world.arena.width);
    h = hash_double(h, world.arena.height);
    for (const Obstacle& obs : world.arena.obstacles) {
        if (const auto* c = std::get_if<Circle>(&obs)) {
            h = RngStream::mix64(h ^ 1);
            h = hash_double(h, c->center.x);
            h = hash_double(h, c->center.y);
            h = hash_double(h, c->radius);
        } else {
            const auto& r = std::get<Rect>(obs);
            h = RngStream::mix64(h ^ 2);
            h = hash_double(h, r.min.x);
            h = hash_double(h, r.min.y);
            h = hash_double(h, r.max.x);
            h = hash_double(h, r.max.y);
        }
    }
    for (const Target& t : world.targets) {
        h = hash_double(h, t.position.x);
        h = hash_double(h, t.position.y);
    }
    for (const RobotState& r : world.robots) {
        h = hash_double(h, r.position.x);
        h = hash_double(h, r.position.y);
        h = hash_double(h, r.theta);
    }
    return h;
}

double mean_nearest_neighbor(const std::vector<RobotState>& robots) {
    const std::size_t n = robots.size();
    if (n < 2) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            best = std::min(best, distance(robots[i].position, robots[j].position));
        }
        sum += best;
    }
    return sum / static_cast<double>(n);
}

void emit_transition_events(const WorldState& before, const WorldState& after,
                            const std::vector<MotionCommand>& commands, const EventSink& sink) {
    for (std::size_t i = 0; i < after.robots.size(); ++i) {
        const Phase was = before.robots[i].phase;
        const Phase now = after.robots[i].phase;
        const Vec2& pos = after.robots[i].position;
        const double t = after.time;
        const int id = static_cast<int>(i);
        if (was == now && !commands[i].avoidance) continue;
        if (commands[i].avoidance)
            sink({t, id, SimEvent::Type::Avoid, pos, -1});
        else if (now == Phase::Turn && was != Phase::Turn && !commands[i].catch_target)
            sink({t, id, SimEvent::Type::Turn, pos, -1});
        if (now == Phase::PotentialFieldRoutine && was != Phase::PotentialFieldRoutine)
            sink({t, id, SimEvent::Type::PfEnter, pos, -1});
        if (was == Phase::PotentialFieldRoutine && now != Phase::PotentialFieldRoutine)
            sink({t, id, SimEvent::Type::PfExit, pos, -1});
    }
}

}  // namespace

const char* event_name(SimEvent::Type t) {
    switch (t) {
        case SimEvent::Type::Turn: return "turn";
        case SimEvent::Type::Avoid: return "avoid";
        case SimEvent::Type::PfEnter: return "pf_enter";
        case SimEvent::Type::PfExit: return "pf_exit";
        case SimEvent::Type::Catch: return "catch";
        case SimEvent::Type::Pose: return "pose";
    }
    return "?";
}

void SimConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("SimConfig: dt must be > 0");
    if (!(t_max > 0.0)) throw std::invalid_argument("SimConfig: t_max must be > 0");
    if (n_robots < 1) throw std::invalid_argument("SimConfig: n_robots must be >= 1");
    strategy.validate();
    scenario.validate();
}

StrategyConfig resolved_strategy(const SimConfig& config) {
    StrategyConfig s = config.strategy;
    if (s.d_min <= 0.0) s.d_min = config.dt;
    if (s.d_max <= 0.0) s.d_max = config.scenario.arena.diagonal() / s.k;
    if (s.d_min > s.d_max) s.d_min = s.d_max;
    return s;
}

WorldState make_initial_world(const SimConfig& config) {
    config.validate();
    WorldState world;
    world.arena = config.scenario.arena;
    world.sensing_radius = config.scenario.r_v;
    world.avoid_distance = 0.5 * config.scenario.r_v;
    world.time = 0.0;
    for (const Vec2& pos : config.scenario.targets)
        world.targets.push_back(
            {pos, config.scenario.r_v, false, std::nullopt, config.scenario.pheromone_radius});

    const RngStream root(config.master_seed);
    RngStream spawn = root.child("spawn");
    for (int i = 0; i < config.n_robots; ++i) {
        RobotState r;
        r.id = i;
        r.rng = root.child(static_cast<std::uint64_t>(i));
        bool placed = false;
        for (int attempt = 0; attempt < kSpawnAttempts && !placed; ++attempt) {
            const Vec2 p{sample_uniform(spawn) * world.arena.width,
                         sample_uniform(spawn) * world.arena.height};
            if (!world.arena.in_free_space(p)) continue;
            const bool clash =
                std::any_of(world.robots.begin(), world.robots.end(), [&](const RobotState& o) {
                    return distance(o.position, p) < kMinSeparation;
                });
            if (!clash) {
                r.position = p;
                placed = true;
            }
        }
        if (!placed) throw std::runtime_error("make_initial_world: no free space to place robots");
        r.theta = -kPi + sample_uniform(r.rng) * 2.0 * kPi;
        r.phase = Phase::Init;
        world.robots.push_back(r);
    }
    return world;
}

WorldState tick(const WorldState& world, const SimConfig& config, const EventSink& sink) {
    const StrategyConfig strategy = resolved_strategy(config);
    const int n = static_cast<int>(world.robots.size());

    // Phase A: controller decisions against the frozen snapshot.
    std::vector<FsmResult> decisions(static_cast<std::size_t>(n));
    auto decide = [&](int i) { decisions[i] = fsm_step(world.robots[i], sense(world, i), strategy, config.dt); };
    if (config.reverse_update_order)
        for (int i = n - 1; i >= 0; --i) decide(i);
    else
        for (int i = 0; i < n; ++i) decide(i);

    // Phase B: kinematics, collision resolution, commits.
    std::vector<RobotState> proposed(static_cast<std::size_t>(n));
    std::vector<MotionCommand> commands(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& [state, cmd] = decisions[i];
        proposed[i] = step_kinematics(state, cmd.translate, cmd.speed, config.dt);
        commands[i] = cmd;
    }
    proposed = resolve_collisions(world, proposed);

    WorldState next = world;
    next.time = world.time + config.dt;
    for (int i = 0; i < n; ++i) {
        proposed[i].distance_traveled += distance(proposed[i].position, world.robots[i].position);
        next.robots[i] = proposed[i];
    }

    // Pheromone commits in ascending robot id: first catch of a target wins,
    // later claimants revert to their pre-tick state and re-perceive next tick.
    for (int i = 0; i < n; ++i) {
        if (!commands[i].catch_target) continue;
        const int target_id = *commands[i].catch_target;
        if (!next.targets[target_id].found) {
            deposit_pheromone(next, target_id, next.time);
            if (sink)
                sink({next.time, i, SimEvent::Type::Catch, next.robots[i].position, target_id});
        } else {
            next.robots[i] = world.robots[i];
            commands[i] = {};
        }
    }

    if (sink) emit_transition_events(world, next, commands, sink);
    return next;
}

TrialResult run_trial(const SimConfig& config, const EventSink& sink) {
    WorldState world = make_initial_world(config);

    TrialResult result;
    result.scenario_hash = layout_hash(world);

    const auto max_ticks =
        static_cast<std::int64_t>(std::ceil(config.t_max / config.dt - 1e-9));
    double nn_accum = 0.0;
    while (!world.all_targets_found() && result.ticks < max_ticks) {
        world = tick(world, config, sink);
        ++result.ticks;
        nn_accum += mean_nearest_neighbor(world.robots);
        if (sink && result.ticks % kPoseIntervalTicks == 0)
            for (const RobotState& r : world.robots)
                sink({world.time, r.id, SimEvent::Type::Pose, r.position, -1});
    }

    result.completed = world.all_targets_found();
    for (const Target& t : world.targets)
        if (t.found) result.per_target_times.push_back(*t.found_time);
    std::sort(result.per_target_times.begin(), result.per_target_times.end());
    result.completion_time = result.completed
                                 ? (result.per_target_times.empty() ? 0.0
                                                                    : result.per_target_times.back())
                                 : config.t_max;
    for (const RobotState& r : world.robots) {
        result.total_distance.push_back(r.distance_traveled);
        result.event_counts.push_back(r.events);
    }
    result.mean_nn_distance = result.ticks > 0 ? nn_accum / static_cast<double>(result.ticks) : 0.0;
    return result;
}

std::string TrialResult::to_json() const {
    nlohmann::json j;
    j["completed"] = completed;
    j["completion_time"] = completion_time;
    j["per_target_times"] = per_target_times;
    j["total_distance"] = total_distance;
    nlohmann::json ev;
    std::vector<std::int64_t> turns, avoidances, pf;
    for (const EventCounts& c : event_counts) {
        turns.push_back(c.turns);
        avoidances.push_back(c.avoidances);
        pf.push_back(c.pf_activations);
    }
    ev["turns"] = turns;
    ev["avoidances"] = avoidances;
    ev["pf_activations"] = pf;
    j["events"] = ev;
    j["mean_nn_distance"] = mean_nn_distance;
    j["ticks"] = ticks;
    j["scenario_hash"] = scenario_hash;
    return j.dump();
}

}  // namespace swarmsearch
