#pragma once

#include <span>
#include <vector>

namespace swarmsearch {

/// Summary of one sample: mean/std-dev (sample std, 0 for a single value),
/// median, min, max.
struct SummaryStats {
    int count = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double median = 0.0;
    double min = 0.0;
    double max = 0.0;
};

SummaryStats summarize(std::span<const double> values);

/// Standard normal CDF.
double normal_cdf(double z);

struct MannWhitneyResult {
    double u_a = 0.0;  // rank-sum statistic of sample a
    double u_b = 0.0;
    double z = 0.0;    // normal approximation with tie and continuity correction
    double p_value = 1.0;  // two-sided
};

/// Mann-Whitney U rank-sum test (two-sided), tie-corrected normal approximation.
/// Throws std::invalid_argument if either sample is empty.
MannWhitneyResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

/// Exact two-sided paired sign test: p-value for `positives` of `n` nonzero
/// differences being positive under the null of no difference.
double sign_test_p(int positives, int n);

}  // namespace swarmsearch
