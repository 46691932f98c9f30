#include "swarmsearch/levy_theory.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <stdexcept>

namespace swarmsearch {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Envelope exp(-gamma q^alpha) drops below 1e-12 past this point.
double envelope_cutoff(double alpha, double gamma) {
    return std::pow(-std::log(1e-12) / gamma, 1.0 / alpha);
}

template <typename F>
double integrate_panel(const F& f, double a, double b) {
    using boost::math::quadrature::gauss_kronrod;
    return gauss_kronrod<double, 15>::integrate(f, a, b, 10, 1e-12);
}

}  // namespace

void SearchGeometry::validate() const {
    if (!(lambda > 0.0)) throw std::invalid_argument("SearchGeometry: lambda must be > 0");
    if (!(r_v > 0.0)) throw std::invalid_argument("SearchGeometry: r_v must be > 0");
}

double levy_pdf(double alpha, double gamma, double l) {
    if (!(alpha > 0.0) || !(alpha <= 2.0))
        throw std::invalid_argument("levy_pdf: alpha must be in (0, 2]");
    if (!(gamma > 0.0)) throw std::invalid_argument("levy_pdf: gamma must be > 0");

    const double freq = std::fabs(l);  // symmetric in l
    const auto integrand = [&](double q) {
        return std::exp(-gamma * std::pow(q, alpha)) * std::cos(q * freq);
    };

    const double q_env = envelope_cutoff(alpha, gamma);
    const double half_period = kPi / freq;  // inf when freq == 0

    // Non-oscillatory regime: no cosine zero before the envelope dies.
    if (!(freq > 0.0) || q_env * freq < kPi / 2.0) {
        using boost::math::quadrature::gauss_kronrod;
        return gauss_kronrod<double, 31>::integrate(integrand, 0.0, q_env, 12, 1e-12) / kPi;
    }

    // Panels between consecutive zeros of cos(q l) form an alternating series
    // with decreasing magnitude (the envelope is monotone); truncating when a
    // panel falls under tolerance bounds the remainder by that panel.
    constexpr double kPanelStop = 1e-11;
    double zero = (kPi / 2.0) / freq;
    double sum = integrate_panel(integrand, 0.0, zero);
    double comp = 0.0;  // Kahan compensation
    for (int k = 0; k < 4'000'000; ++k) {
        const double next = zero + half_period;
        const double panel = integrate_panel(integrand, zero, next);
        const double y = panel - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        zero = next;
        if (std::fabs(panel) < kPanelStop && zero > q_env) return sum / kPi;
    }
    throw std::runtime_error("levy_pdf: quadrature failed to converge");
}

double tail_approx(double alpha, double l) {
    if (!(l > 0.0)) throw std::domain_error("tail_approx: l must be > 0");
    return std::pow(l, -alpha);
}

double mean_flights(const SearchGeometry& geom, double alpha) {
    geom.validate();
    if (!(alpha > 0.0) || !(alpha <= 2.0))
        throw std::invalid_argument("mean_flights: alpha must be in (0, 2]");
    return std::pow(geom.ratio(), (alpha - 1.0) / 2.0);
}

double optimal_alpha(const SearchGeometry& geom) {
    geom.validate();
    if (!(geom.ratio() > 1.0))
        throw std::domain_error("optimal_alpha: lambda/r_v must be > 1");
    const double log_ratio = std::log(geom.ratio());
    return 2.0 - 1.0 / (log_ratio * log_ratio);
}

}  // namespace swarmsearch
