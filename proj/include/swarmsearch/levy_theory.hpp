#pragma once

namespace swarmsearch {

/// Geometry of a random search problem: mean free distance between target
/// sites and the forager's sensing radius.
struct SearchGeometry {
    double lambda = 0.0;  // mean distance between successive target sites, m
    double r_v = 0.0;     // sensing radius, m

    void validate() const;
    double ratio() const { return lambda / r_v; }
};

/**
 * Levy probability density p(l) = (1/pi) * integral_0^inf exp(-gamma q^alpha) cos(q l) dq,
 * evaluated by adaptive quadrature (absolute tolerance 1e-8). The oscillatory
 * integrand is split at the cosine zeros and the alternating panel series is
 * truncated once panels drop below tolerance; the envelope exp(-gamma q^alpha)
 * bounds the tail.
 *
 * Throws std::invalid_argument unless 0 < alpha <= 2 and gamma > 0.
 */
double levy_pdf(double alpha, double gamma, double l);

/// Large-l power-tail approximation l^(-alpha) (gamma fixed at 1).
/// Throws std::domain_error for l <= 0.
double tail_approx(double alpha, double l);

/// Mean number of flights between successive target sites: (lambda/r_v)^((alpha-1)/2).
double mean_flights(const SearchGeometry& geom, double alpha);

/// Optimal Levy exponent 2 - 1/(ln(lambda/r_v))^2.
/// Throws std::domain_error when lambda/r_v <= 1.
double optimal_alpha(const SearchGeometry& geom);

}  // namespace swarmsearch
