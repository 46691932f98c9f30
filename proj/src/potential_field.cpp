#include "swarmsearch/potential_field.hpp"

#include <stdexcept>

namespace swarmsearch {

void PotentialParams::validate() const {
    if (!(k_rep > 0.0)) throw std::invalid_argument("PotentialParams: k_rep must be > 0");
    if (!(rho0 > 0.0)) throw std::invalid_argument("PotentialParams: rho0 must be > 0");
}

double repulsive_potential(double rho, const PotentialParams& params) {
    params.validate();
    if (!(rho > 0.0)) throw std::domain_error("repulsive_potential: rho must be > 0");
    if (rho > params.rho0) return 0.0;
    return 0.5 * params.k_rep * (1.0 / rho - 1.0 / params.rho0);
}

Vec2 repulsive_force(const Vec2& q, const Vec2& q_neighbor, const PotentialParams& params) {
    params.validate();
    const Vec2 delta = q - q_neighbor;
    const double rho = delta.norm();
    if (rho == 0.0) throw std::domain_error("repulsive_force: coincident points");
    if (rho > params.rho0) return {0.0, 0.0};
    const double magnitude = params.k_rep * (1.0 / rho - 1.0 / params.rho0) / (rho * rho);
    return delta * (magnitude / rho);
}

Vec2 net_repulsion(const Vec2& q, std::span<const Vec2> neighbors, const PotentialParams& params) {
    Vec2 total{0.0, 0.0};
    for (const Vec2& nb : neighbors) total += repulsive_force(q, nb, params);
    return total;
}

}  // namespace swarmsearch
