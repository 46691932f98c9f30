#include "swarmsearch/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swarmsearch {

SummaryStats summarize(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("summarize: empty sample");
    SummaryStats s;
    s.count = static_cast<int>(values.size());
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    s.min = sorted.front();
    s.max = sorted.back();
    const std::size_t n = sorted.size();
    s.median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    double sum = 0.0;
    for (double v : sorted) sum += v;
    s.mean = sum / static_cast<double>(n);
    if (n > 1) {
        double ss = 0.0;
        for (double v : sorted) ss += (v - s.mean) * (v - s.mean);
        s.stddev = std::sqrt(ss / static_cast<double>(n - 1));
    }
    return s;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / 1.4142135623730951); }

MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("mann_whitney_u: empty sample");
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());

    struct Tagged {
        double v;
        bool from_a;
    };
    std::vector<Tagged> all;
    all.reserve(a.size() + b.size());
    for (double v : a) all.push_back({v, true});
    for (double v : b) all.push_back({v, false});
    std::sort(all.begin(), all.end(), [](const Tagged& x, const Tagged& y) { return x.v < y.v; });

    // Average ranks within tie groups; collect tie sizes for the variance correction.
    double rank_sum_a = 0.0;
    double tie_term = 0.0;
    std::size_t i = 0;
    while (i < all.size()) {
        std::size_t j = i;
        while (j < all.size() && all[j].v == all[i].v) ++j;
        const double t = static_cast<double>(j - i);
        const double avg_rank = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
        for (std::size_t k = i; k < j; ++k)
            if (all[k].from_a) rank_sum_a += avg_rank;
        tie_term += t * t * t - t;
        i = j;
    }

    MannWhitneyResult r;
    r.u_a = rank_sum_a - na * (na + 1.0) / 2.0;
    r.u_b = na * nb - r.u_a;

    const double n = na + nb;
    const double mu = na * nb / 2.0;
    const double var = na * nb / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if (var <= 0.0) {
        r.z = 0.0;
        r.p_value = 1.0;
        return r;
    }
    const double diff = r.u_a - mu;
    const double cc = diff > 0.0 ? -0.5 : (diff < 0.0 ? 0.5 : 0.0);  // continuity correction
    r.z = (diff + cc) / std::sqrt(var);
    r.p_value = std::min(1.0, 2.0 * (1.0 - normal_cdf(std::fabs(r.z))));
    return r;
}

double sign_test_p(int positives, int n) {
    if (n < 0 || positives < 0 || positives > n) throw std::invalid_argument("sign_test_p: bad counts");
    if (n == 0) return 1.0;
    const auto log_pmf = [n](int i) {
        return std::lgamma(n + 1.0) - std::lgamma(i + 1.0) - std::lgamma(n - i + 1.0) -
               n * 0.6931471805599453;
    };
    double lower = 0.0, upper = 0.0;
    for (int i = 0; i <= positives; ++i) lower += std::exp(log_pmf(i));
    for (int i = positives; i <= n; ++i) upper += std::exp(log_pmf(i));
    return std::min(1.0, 2.0 * std::min(lower, upper));
}

}  // namespace swarmsearch
