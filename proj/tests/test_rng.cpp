#include "swarmsearch/rng.hpp"

#include "doctest.h"

#include <stdexcept>
#include "support/stat_oracles.hpp"

#include <cmath>
#include <set>
#include <vector>

using namespace swarmsearch;

TEST_CASE("uniform draws stay in the open interval and advance the stream") {
    RngStream rng(42);
    const double a = sample_uniform(rng);
    const double b = sample_uniform(rng);
    CHECK(a != b);
    double lo = 1.0, hi = 0.0;
    RngStream r2(7);
    for (int i = 0; i < 100000; ++i) {
        const double u = sample_uniform(r2);
        lo = std::min(lo, u);
        hi = std::max(hi, u);
    }
    CHECK(lo > 0.0);
    CHECK(hi < 1.0);
}

TEST_CASE("uniform determinism: same seed, same draw index, same value") {
    RngStream a(123456789);
    RngStream b(123456789);
    for (int i = 0; i < 1000; ++i) CHECK(sample_uniform(a) == sample_uniform(b));
}

TEST_CASE("uniform sample mean matches 1/2") {
    RngStream rng(2024);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) sum += sample_uniform(rng);
    CHECK(std::fabs(sum / n - 0.5) < 0.005);
}

TEST_CASE("child streams are label-separated and ignore parent draw position") {
    RngStream parent(99);
    RngStream c0 = parent.child(std::uint64_t{0});
    RngStream c1 = parent.child(std::uint64_t{1});
    CHECK(c0.seed() != c1.seed());
    CHECK(sample_uniform(c0) != sample_uniform(c1));

    RngStream parent2(99);
    sample_uniform(parent2);  // advancing the parent must not change children
    CHECK(parent2.child(std::uint64_t{0}).seed() == parent.child(std::uint64_t{0}).seed());
    CHECK(parent.child("scenario").seed() != parent.child("spawn").seed());
}

TEST_CASE("box-muller transform point values") {
    CHECK(box_muller(std::exp(-0.5), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    // u1 -> 1 collapses the radius regardless of u2
    CHECK(std::fabs(box_muller(1.0 - 1e-15, 0.37)) < 1e-6);
}

TEST_CASE("gaussian sample moments and normality") {
    RngStream rng(31415);
    const int n = 100000;
    std::vector<double> z(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        z[i] = sample_gaussian(rng);
        sum += z[i];
    }
    const double mean = sum / n;
    double ss = 0.0;
    for (double v : z) ss += (v - mean) * (v - mean);
    const double var = ss / (n - 1);
    CHECK(std::fabs(mean) < 0.02);
    CHECK(std::fabs(var - 1.0) < 0.05);
    CHECK(oracles::ks_distance(z, oracles::std_normal_cdf) < 0.01);
}

TEST_CASE("levy variate at alpha=1 is standard Cauchy (stability)") {
    const LevyParams params{1.0, 1.0, 100};
    RngStream rng(8675309);
    const int n = 100000;
    std::vector<double> z(n);
    for (int i = 0; i < n; ++i) z[i] = sample_levy(params, rng);
    CHECK(oracles::ks_distance(z, oracles::std_cauchy_cdf) < 0.02);
}

TEST_CASE("levy variate sign symmetry") {
    const LevyParams params{1.5, 1.0, 100};
    RngStream rng(555);
    const int n = 100000;
    int positives = 0, nonzero = 0;
    for (int i = 0; i < n; ++i) {
        const double z = sample_levy(params, rng);
        if (z != 0.0) {
            ++nonzero;
            if (z > 0.0) ++positives;
        }
    }
    // two-sided sign test at the 1% level
    const double zscore = (positives - 0.5 * nonzero) / std::sqrt(0.25 * nonzero);
    CHECK(std::fabs(zscore) < 2.5758);
}

TEST_CASE("levy tail exponent tracks alpha (smoke-scale)") {
    const LevyParams params{1.5, 1.0, 100};
    RngStream rng(777);
    const int n = 100000;
    std::vector<double> mags(n);
    for (int i = 0; i < n; ++i) mags[i] = std::fabs(sample_levy(params, rng));
    const double slope = oracles::survival_tail_slope(mags);
    CHECK(slope == doctest::Approx(-1.5).epsilon(0.2));
}

TEST_CASE("gamma scales samples by gamma^(1/alpha)") {
    SUBCASE("alpha = 1: integer scale is exact") {
        RngStream a(4242), b(4242);
        const LevyParams p1{1.0, 1.0, 100};
        const LevyParams p2{1.0, 2.0, 100};
        for (int i = 0; i < 200; ++i)
            CHECK(sample_levy(p2, b) == 2.0 * sample_levy(p1, a));
    }
    SUBCASE("general alpha") {
        RngStream a(4242), b(4242);
        const LevyParams p1{1.5, 1.0, 100};
        const LevyParams p2{1.5, 3.0, 100};
        const double scale = std::pow(3.0, 1.0 / 1.5);
        for (int i = 0; i < 200; ++i) {
            const double s1 = sample_levy(p1, a);
            const double s2 = sample_levy(p2, b);
            CHECK(s2 == doctest::Approx(s1 * scale).epsilon(1e-12));
        }
    }
}

TEST_CASE("levy samples stay finite at small alpha") {
    const LevyParams params{0.5, 1.0, 50};
    RngStream rng(1);
    for (int i = 0; i < 10000; ++i) CHECK(std::isfinite(sample_levy(params, rng)));
}

TEST_CASE("levy parameter validation") {
    RngStream rng(1);
    CHECK_THROWS_AS(sample_levy({0.0, 1.0, 100}, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_levy({2.5, 1.0, 100}, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_levy({1.0, 0.0, 100}, rng), std::invalid_argument);
    CHECK_THROWS_AS(sample_levy({1.0, 1.0, 0}, rng), std::invalid_argument);
    CHECK_NOTHROW(sample_levy({2.0, 1.0, 100}, rng));  // alpha = 2 accepted
}
