#pragma once

#include "swarmsearch/vec2.hpp"

#include <span>

namespace swarmsearch {

/// Repulsive-field constants: force scale and influence threshold.
struct PotentialParams {
    double k_rep = 1.0;  // scaling factor, force units
    double rho0 = 1.0;   // influence threshold, m

    void validate() const;
};

/// Repulsive potential 0.5 * k_rep * (1/rho - 1/rho0) for rho <= rho0, else 0.
/// Throws std::domain_error for rho <= 0.
double repulsive_potential(double rho, const PotentialParams& params);

/**
 * Repulsive force on a robot at q from a neighbor at q_neighbor:
 * k_rep * (1/rho - 1/rho0) * (1/rho^2) * (q - q_neighbor)/rho for rho <= rho0,
 * zero beyond the threshold. Points from the neighbor toward q.
 * Throws std::domain_error when the points coincide.
 */
Vec2 repulsive_force(const Vec2& q, const Vec2& q_neighbor, const PotentialParams& params);

/// Superposition of repulsive forces from all neighbors.
Vec2 net_repulsion(const Vec2& q, std::span<const Vec2> neighbors, const PotentialParams& params);

}  // namespace swarmsearch
