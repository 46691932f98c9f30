#include "swarmsearch/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace swarmsearch {

void LevyParams::validate() const {
    if (!(alpha > 0.0) || !(alpha <= 2.0))
        throw std::invalid_argument("LevyParams: alpha must be in (0, 2]");
    if (!(gamma > 0.0)) throw std::invalid_argument("LevyParams: gamma must be > 0");
    if (n < 1) throw std::invalid_argument("LevyParams: n must be >= 1");
}

double sample_uniform(RngStream& rng) noexcept {
    // 53-bit mantissa, offset by half an ulp: never exactly 0 or 1.
    return (static_cast<double>(rng.next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double box_muller(double u1, double u2) noexcept {
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

double sample_gaussian(RngStream& rng) noexcept {
    const double u1 = sample_uniform(rng);
    const double u2 = sample_uniform(rng);
    return box_muller(u1, u2);
}

double sample_levy(const LevyParams& params, RngStream& rng) {
    params.validate();
    const double inv_alpha = 1.0 / params.alpha;
    double sum = 0.0;
    for (int k = 0; k < params.n; ++k) {
        const double a = sample_gaussian(rng);
        double b = sample_gaussian(rng);
        while (b == 0.0) b = sample_gaussian(rng);
        sum += a / std::pow(std::fabs(b), inv_alpha);
    }
    const double z = sum / std::pow(static_cast<double>(params.n), inv_alpha);
    return z * std::pow(params.gamma, inv_alpha);
}

}  // namespace swarmsearch
