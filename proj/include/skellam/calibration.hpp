#pragma once

#include <vector>

#include "skellam/distribution.hpp"
#include "skellam/exec.hpp"
#include "skellam/inflation.hpp"
#include "skellam/odds.hpp"

namespace skellam {

struct CalibrationResult {
    ScoringRates rates;
    double residual_mean = 0.0; // market mean minus model mean
    double residual_var = 0.0;  // market variance minus model variance
    double objective = 0.0;     // residual_mean^2 + residual_var^2
    double implied_vol = 0.0;   // sqrt(lambda_a + lambda_b)
};

/// Fits nonnegative rates to a market difference distribution by moment
/// matching. With M = mean - lead and V = variance, the minimizer of
/// (M - (a-b))^2 + (V - (a+b))^2 over a,b >= 0 is the orthogonal projection of
/// (M, V) onto the cone s >= |d| in (d, s) = (a-b, a+b) coordinates:
/// the point itself when V >= |M|, the nearest cone edge when V > -|M|,
/// and the apex (0,0) otherwise.
CalibrationResult calibrate(const ScoreDiffDist& dist, int lead);

/// Standard deviation of the remaining score difference: sqrt(la + lb).
double implied_volatility(const ScoringRates& rates);

struct InflationFit {
    InflationModel model;
    double sse = 0.0; // achieved sum of squared probability differences
};

/// Chooses the inflation factor minimizing the squared probability error
/// against the market over the market support, by golden-section search
/// (tolerance 1e-10) on p in (0, 0.5] for TypeOne or theta in [0, min(5,
/// largest value keeping the deflation below 1)] for TypeTwo.
/// Throws degenerate_error when the base draw mass is 0 or 1.
InflationFit fit_inflation(const ScoreDiffDist& market, const ScoringRates& base_rates,
                           InflationKind kind);

struct TimelinePoint {
    double t = 0.0;
    GameState state;
    CalibrationResult result;
    // rates divided by remaining time, defined only for t < 1
    double per_rem_a = 0.0;
    double per_rem_b = 0.0;
    bool per_rem_defined = false;
};

/// Calibrates each snapshot's sub-game market (odds shifted by the current
/// score, lead absorbed, so the fit runs with lead 0). At t = 1 the rates are
/// (0, 0) by convention. Throws std::invalid_argument naming the offending
/// snapshot index when t decreases, t leaves [0,1], or a score decreases.
std::vector<TimelinePoint> calibrate_timeline(
    const std::vector<std::pair<GameState, OddsMatrix>>& snapshots,
    ExecMode mode = ExecMode::Parallel);

} // namespace skellam
