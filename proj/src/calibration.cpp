#include "skellam/calibration.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "skellam/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skellam {

CalibrationResult calibrate(const ScoreDiffDist& dist, int lead) {
    const auto [mean, variance] = market_moments(dist);
    const double m = mean - static_cast<double>(lead); // target for lambda_a - lambda_b
    const double v = variance;                         // target for lambda_a + lambda_b

    double d = 0.0;
    double s = 0.0;
    if (v >= std::abs(m)) {
        d = m;
        s = v;
    } else if (v > -std::abs(m)) {
        // Orthogonal projection onto the nearest edge s = |d| of the cone.
        const double u = (std::abs(m) + v) / 2.0;
        d = std::copysign(u, m);
        s = u;
    } // else: apex, both stay 0

    CalibrationResult r;
    r.rates = ScoringRates{(s + d) / 2.0, (s - d) / 2.0};
    r.residual_mean = m - (r.rates.lambda_a - r.rates.lambda_b);
    r.residual_var = v - (r.rates.lambda_a + r.rates.lambda_b);
    r.objective = r.residual_mean * r.residual_mean + r.residual_var * r.residual_var;
    r.implied_vol = implied_volatility(r.rates);
    return r;
}

double implied_volatility(const ScoringRates& rates) {
    rates.validate();
    return std::sqrt(rates.lambda_a + rates.lambda_b);
}

namespace {

double golden_section_min(double lo, double hi, double tol, const auto& f) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo;
    double b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return (a + b) / 2.0;
}

} // namespace

InflationFit fit_inflation(const ScoreDiffDist& market, const ScoringRates& base_rates,
                           InflationKind kind) {
    market.validate();
    const ScoreDiffDist base = skellam_dist(base_rates);
    const double p0 = base.prob(0);
    if (p0 <= 0.0 || p0 >= 1.0)
        throw degenerate_error("inflation fit requires a base draw probability inside (0, 1)");

    const auto sse_for = [&](const InflationModel& model) {
        const ScoreDiffDist inflated = inflate(base, model);
        double sse = 0.0;
        for (int k = market.k_min; k <= market.k_max(); ++k) {
            const double d = inflated.prob(k) - market.prob(k);
            sse += d * d;
        }
        return sse;
    };

    InflationFit fit;
    if (kind == InflationKind::None) {
        fit.model = InflationModel{InflationKind::None, 0.0};
        fit.sse = sse_for(fit.model);
        return fit;
    }

    double lo = 0.0;
    double hi = 0.0;
    if (kind == InflationKind::TypeOne) {
        lo = 1e-12;
        hi = 0.5;
    } else {
        lo = 0.0;
        // theta is capped where the compensating deflation would reach 1.
        hi = std::min(5.0, (1.0 - p0) / p0 * (1.0 - 1e-12));
    }
    const auto objective = [&](double factor) {
        return sse_for(InflationModel{kind, factor});
    };
    const double factor = golden_section_min(lo, hi, 1e-10, objective);
    fit.model = InflationModel{kind, factor};
    fit.sse = objective(factor);
    return fit;
}

std::vector<TimelinePoint> calibrate_timeline(
    const std::vector<std::pair<GameState, OddsMatrix>>& snapshots, ExecMode mode) {
    for (std::size_t i = 0; i < snapshots.size(); ++i) {
        const GameState& s = snapshots[i].first;
        try {
            s.validate();
        } catch (const std::domain_error& e) {
            throw std::invalid_argument("snapshot " + std::to_string(i) + ": " + e.what());
        }
        if (i > 0) {
            const GameState& prev = snapshots[i - 1].first;
            if (s.t < prev.t)
                throw std::invalid_argument("snapshot " + std::to_string(i) +
                                            ": game clock decreases");
            if (s.score_a < prev.score_a || s.score_b < prev.score_b)
                throw std::invalid_argument("snapshot " + std::to_string(i) +
                                            ": score decreases");
        }
    }

    std::vector<TimelinePoint> points(snapshots.size());
    std::exception_ptr failure = nullptr;

    const auto compute_one = [&](std::size_t i) {
        const auto& [state, matrix] = snapshots[i];
        TimelinePoint p;
        p.t = state.t;
        p.state = state;
        if (state.t >= 1.0) {
            // Nothing remains to be scored; rates are pinned at zero.
            p.result = CalibrationResult{ScoringRates{0.0, 0.0}, 0.0, 0.0, 0.0, 0.0};
            p.per_rem_defined = false;
        } else {
            const OddsMatrix sub = adjust_for_state(matrix, state);
            const MarketDist market = market_score_diff(sub);
            p.result = calibrate(market.dist, 0);
            p.per_rem_a = p.result.rates.lambda_a / (1.0 - state.t);
            p.per_rem_b = p.result.rates.lambda_b / (1.0 - state.t);
            p.per_rem_defined = true;
        }
        points[i] = p;
    };

#ifdef _OPENMP
    if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < snapshots.size(); ++i) {
            try {
                compute_one(i);
            } catch (...) {
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
        return points;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < snapshots.size(); ++i) compute_one(i);
    (void)failure;
    return points;
}

} // namespace skellam
