#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "skellam/distribution.hpp"
#include "skellam/inflation.hpp"

namespace skellam {

struct ComparisonRow {
    int score_diff = 0;
    double market_prob = 0.0;
    double model_prob = 0.0;
};

/// Side-by-side market and model probabilities per score difference. The
/// model column is the Skellam distribution at the given rates restricted to
/// the market support and renormalized there, so both columns are comparable
/// distributions over the same cells.
std::vector<ComparisonRow> compare(const ScoreDiffDist& market, const ScoringRates& rates);

struct QqResult {
    std::vector<std::pair<double, double>> points; // (market quantile, model quantile)
    std::size_t excluded = 0;                      // pairs dropped for a 0 or 1 probability
};

/// Q-Q data for log fractional odds log((1-p)/p): transforms both sides,
/// sorts them independently, and pairs order statistics. Pairs containing a
/// probability of exactly 0 or 1 are excluded and counted.
QqResult qq_log_odds(const std::vector<std::pair<double, double>>& pairs);

/// Win/draw probability pairs swept along rate pairs with a fixed product:
/// lambda_a = sqrt(product * r), lambda_b = sqrt(product / r) over a log grid
/// of ratios r chosen so the (inflated) win probability covers [0.05, 0.85]
/// at the endpoints. Rows are sorted by win probability.
std::vector<std::pair<double, double>> win_draw_curve(double rate_product,
                                                      const InflationModel& inflation,
                                                      int n_points = 401);

struct BucketReport {
    std::vector<double> edges;      // 17 edges for the 16 buckets (0.05, 0.85]
    std::vector<long long> counts;  // games per bucket
    std::vector<double> freqs;      // empirical win frequency; NaN where count is 0
    long long overflow_count = 0;   // games with implied probability outside (0.05, 0.85]
    double overflow_freq = 0.0;     // NaN when overflow_count is 0
};

/// Groups games into half-open implied-win-probability buckets of width 0.05
/// over (0.05, 0.85] and reports the empirical home-win frequency per bucket.
BucketReport bucket_calibration(const std::vector<std::pair<double, bool>>& games);

} // namespace skellam
