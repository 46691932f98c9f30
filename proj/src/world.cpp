#include "swarmsearch/world.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swarmsearch {

namespace {

constexpr int kPlacementAttempts = 10000;

double clamp(double v, double lo, double hi) { return std::max(lo, std::min(v, hi)); }

bool circle_rect_overlap(const Circle& c, const Rect& r) {
    const Vec2 closest{clamp(c.center.x, r.min.x, r.max.x), clamp(c.center.y, r.min.y, r.max.y)};
    return distance(closest, c.center) < c.radius;
}

Vec2 uniform_point(RngStream& rng, double x0, double x1, double y0, double y1) {
    return {x0 + sample_uniform(rng) * (x1 - x0), y0 + sample_uniform(rng) * (y1 - y0)};
}

}  // namespace

bool contains(const Obstacle& obstacle, const Vec2& point) {
    return std::visit(
        [&](const auto& shape) {
            using T = std::decay_t<decltype(shape)>;
            if constexpr (std::is_same_v<T, Circle>) {
                return distance(shape.center, point) < shape.radius;
            } else {
                return point.x > shape.min.x && point.x < shape.max.x && point.y > shape.min.y &&
                       point.y < shape.max.y;
            }
        },
        obstacle);
}

bool overlaps(const Obstacle& a, const Obstacle& b) {
    return std::visit(
        [](const auto& sa, const auto& sb) {
            using A = std::decay_t<decltype(sa)>;
            using B = std::decay_t<decltype(sb)>;
            if constexpr (std::is_same_v<A, Circle> && std::is_same_v<B, Circle>) {
                return distance(sa.center, sb.center) < sa.radius + sb.radius;
            } else if constexpr (std::is_same_v<A, Circle> && std::is_same_v<B, Rect>) {
                return circle_rect_overlap(sa, sb);
            } else if constexpr (std::is_same_v<A, Rect> && std::is_same_v<B, Circle>) {
                return circle_rect_overlap(sb, sa);
            } else {
                return sa.min.x < sb.max.x && sb.min.x < sa.max.x && sa.min.y < sb.max.y &&
                       sb.min.y < sa.max.y;
            }
        },
        a, b);
}

bool Arena::in_free_space(const Vec2& p) const {
    if (!in_bounds(p)) return false;
    for (const Obstacle& obs : obstacles)
        if (contains(obs, p)) return false;
    return true;
}

double Arena::diagonal() const { return std::hypot(width, height); }

void Scenario::validate() const {
    if (!(arena.width > 0.0) || !(arena.height > 0.0))
        throw std::invalid_argument("Scenario: arena dimensions must be > 0");
    if (!(r_v > 0.0)) throw std::invalid_argument("Scenario: r_v must be > 0");
    if (!(pheromone_radius > r_v))
        throw std::invalid_argument("Scenario: pheromone_radius must exceed r_v");
    for (const Obstacle& obs : arena.obstacles) {
        const auto inside = std::visit(
            [&](const auto& shape) {
                using T = std::decay_t<decltype(shape)>;
                if constexpr (std::is_same_v<T, Circle>) {
                    return arena.in_bounds({shape.center.x - shape.radius, shape.center.y - shape.radius}) &&
                           arena.in_bounds({shape.center.x + shape.radius, shape.center.y + shape.radius});
                } else {
                    return arena.in_bounds(shape.min) && arena.in_bounds(shape.max);
                }
            },
            obs);
        if (!inside) throw std::invalid_argument("Scenario: obstacle outside arena bounds");
        for (const Vec2& t : targets)
            if (contains(obs, t)) throw std::invalid_argument("Scenario: obstacle covers a target");
    }
    for (const Vec2& t : targets)
        if (!arena.in_bounds(t)) throw std::invalid_argument("Scenario: target outside arena");
}

Scenario generate_scenario(RngStream rng, const ScenarioGenParams& params) {
    if (params.n_targets < 0) throw std::invalid_argument("generate_scenario: n_targets < 0");
    if (params.min_obstacles < 0 || params.max_obstacles < params.min_obstacles)
        throw std::invalid_argument("generate_scenario: bad obstacle count range");
    Scenario sc;
    sc.arena.width = params.arena_width;
    sc.arena.height = params.arena_height;
    sc.r_v = params.r_v;
    sc.pheromone_radius = params.pheromone_radius;

    const int span = params.max_obstacles - params.min_obstacles + 1;
    const int n_obstacles = params.min_obstacles + static_cast<int>(sample_uniform(rng) * span);

    for (int i = 0; i < n_obstacles; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < 200 && !placed; ++attempt) {
            const bool circle = sample_uniform(rng) < 0.5;
            const double size = params.obstacle_size_min +
                                sample_uniform(rng) * (params.obstacle_size_max - params.obstacle_size_min);
            Obstacle candidate;
            if (circle) {
                const double r = size / 2.0;
                candidate = Circle{uniform_point(rng, r, sc.arena.width - r, r, sc.arena.height - r), r};
            } else {
                const double w = size;
                const double h = params.obstacle_size_min +
                                 sample_uniform(rng) * (params.obstacle_size_max - params.obstacle_size_min);
                const Vec2 lo = uniform_point(rng, 0.0, sc.arena.width - w, 0.0, sc.arena.height - h);
                candidate = Rect{lo, {lo.x + w, lo.y + h}};
            }
            const bool collides = std::any_of(sc.arena.obstacles.begin(), sc.arena.obstacles.end(),
                                              [&](const Obstacle& o) { return overlaps(o, candidate); });
            if (!collides) {
                sc.arena.obstacles.push_back(candidate);
                placed = true;
            }
        }
        // A crowded arena may not fit every obstacle; proceed with fewer.
    }

    for (int i = 0; i < params.n_targets; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < kPlacementAttempts && !placed; ++attempt) {
            const Vec2 p = uniform_point(rng, 0.0, sc.arena.width, 0.0, sc.arena.height);
            if (!sc.arena.in_free_space(p)) continue;
            const bool too_close = std::any_of(sc.targets.begin(), sc.targets.end(), [&](const Vec2& t) {
                return distance(t, p) < 2.0 * params.r_v;
            });
            if (!too_close) {
                sc.targets.push_back(p);
                placed = true;
            }
        }
        if (!placed) throw std::runtime_error("generate_scenario: no free space left for targets");
    }
    return sc;
}

bool WorldState::all_targets_found() const {
    return std::all_of(targets.begin(), targets.end(), [](const Target& t) { return t.found; });
}

Percepts sense(const WorldState& world, int robot_id) {
    if (robot_id < 0 || robot_id >= static_cast<int>(world.robots.size()))
        throw std::out_of_range("sense: unknown robot id");
    const RobotState& me = world.robots[robot_id];
    const Vec2 lookahead{me.position.x + world.avoid_distance * std::cos(me.theta),
                         me.position.y + world.avoid_distance * std::sin(me.theta)};

    Percepts p;
    for (const RobotState& other : world.robots) {
        if (other.id == me.id) continue;
        if (distance(other.position, me.position) < world.sensing_radius)
            p.neighbors.push_back({other.id, other.position - me.position});
    }
    for (std::size_t i = 0; i < world.targets.size(); ++i) {
        const Target& t = world.targets[i];
        if (!t.found) {
            if (distance(t.position, me.position) < t.detect_radius)
                p.targets_in_range.push_back(static_cast<int>(i));
        } else {
            const bool inside = distance(t.position, me.position) < t.pheromone_radius;
            const bool ahead = distance(t.position, lookahead) < t.pheromone_radius;
            if (inside || ahead)
                p.pheromone_zones.push_back({t.position, t.pheromone_radius, inside, ahead});
        }
    }
    p.wall_ahead = !world.arena.in_bounds(lookahead);
    p.obstacle_ahead = std::any_of(world.arena.obstacles.begin(), world.arena.obstacles.end(),
                                   [&](const Obstacle& o) { return contains(o, lookahead); });
    return p;
}

void deposit_pheromone(WorldState& world, int target_id, double time) {
    if (target_id < 0 || target_id >= static_cast<int>(world.targets.size()))
        throw std::out_of_range("deposit_pheromone: unknown target id");
    Target& t = world.targets[target_id];
    if (t.found) throw std::logic_error("deposit_pheromone: target already marked");
    t.found = true;
    t.found_time = time;
}

std::vector<RobotState> resolve_collisions(const WorldState& world,
                                           std::vector<RobotState> proposed) {
    // 1. Wall/obstacle penetration: hold the prior position, keep the rest of
    //    the state (the avoidance transition fires next tick).
    for (std::size_t i = 0; i < proposed.size(); ++i) {
        if (!world.arena.in_free_space(proposed[i].position))
            proposed[i].position = world.robots[i].position;
    }

    // 2. Pairwise separation to exactly kMinSeparation, lowest-id-first order.
    for (int pass = 0; pass < 4; ++pass) {
        bool violation = false;
        for (std::size_t i = 0; i < proposed.size(); ++i) {
            for (std::size_t j = i + 1; j < proposed.size(); ++j) {
                Vec2& pi = proposed[i].position;
                Vec2& pj = proposed[j].position;
                const double d = distance(pi, pj);
                if (d >= kMinSeparation) continue;
                violation = true;
                const Vec2 mid = (pi + pj) / 2.0;
                const Vec2 axis = d > 0.0 ? (pi - pj) / d : Vec2{1.0, 0.0};
                pi = mid + axis * (kMinSeparation / 2.0);
                pj = mid - axis * (kMinSeparation / 2.0);
            }
        }
        if (!violation) break;
    }

    // 3. Safety: separation must not push anyone out of free space.
    for (std::size_t i = 0; i < proposed.size(); ++i) {
        Vec2& p = proposed[i].position;
        p.x = clamp(p.x, 0.0, world.arena.width);
        p.y = clamp(p.y, 0.0, world.arena.height);
        if (!world.arena.in_free_space(p)) p = world.robots[i].position;
    }
    return proposed;
}

}  // namespace swarmsearch
