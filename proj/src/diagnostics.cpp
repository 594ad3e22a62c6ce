#include "skellam/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "skellam/distribution.hpp"

namespace skellam {

std::vector<ComparisonRow> compare(const ScoreDiffDist& market, const ScoringRates& rates) {
    market.validate();
    const ScoreDiffDist model = skellam_dist(rates, 1e-9);

    double inside = 0.0;
    for (int k = market.k_min; k <= market.k_max(); ++k) inside += model.prob(k);

    std::vector<ComparisonRow> rows;
    rows.reserve(market.probs.size());
    for (int k = market.k_min; k <= market.k_max(); ++k) {
        const double model_p = inside > 0.0 ? model.prob(k) / inside : 0.0;
        rows.push_back(ComparisonRow{k, market.prob(k), model_p});
    }
    return rows;
}

QqResult qq_log_odds(const std::vector<std::pair<double, double>>& pairs) {
    QqResult result;
    std::vector<double> market;
    std::vector<double> model;
    market.reserve(pairs.size());
    model.reserve(pairs.size());
    for (const auto& [pm, ps] : pairs) {
        if (!(pm >= 0.0 && pm <= 1.0 && ps >= 0.0 && ps <= 1.0))
            throw std::domain_error("probabilities must lie in [0, 1]");
        if (pm == 0.0 || pm == 1.0 || ps == 0.0 || ps == 1.0) {
            ++result.excluded;
            continue;
        }
        market.push_back(std::log((1.0 - pm) / pm));
        model.push_back(std::log((1.0 - ps) / ps));
    }
    std::sort(market.begin(), market.end());
    std::sort(model.begin(), model.end());
    result.points.reserve(market.size());
    for (std::size_t i = 0; i < market.size(); ++i)
        result.points.emplace_back(market[i], model[i]);
    return result;
}

namespace {

struct WinDraw {
    double win = 0.0;
    double draw = 0.0;
};

// Win/draw of the inflated model at one point of the fixed-product sweep.
// Inflation acts on two cells only, so it is applied arithmetically.
WinDraw win_draw_at(double product, double log_ratio, const InflationModel& inflation) {
    const double r = std::exp(log_ratio);
    const ScoringRates rates{std::sqrt(product * r), std::sqrt(product / r)};
    if (!std::isfinite(rates.lambda_a) || !std::isfinite(rates.lambda_b))
        throw std::domain_error("win probability range is unreachable under this inflation");
    const double win = prob_win(rates, 0);
    const double draw = prob_draw(rates, 0);
    switch (inflation.kind) {
        case InflationKind::None:
            return {win, draw};
        case InflationKind::TypeOne:
            return {(1.0 - inflation.factor) * win,
                    inflation.factor + (1.0 - inflation.factor) * draw};
        case InflationKind::TypeTwo: {
            const double gamma = type_two_gamma(inflation.factor, draw);
            return {(1.0 - gamma) * win, (1.0 + inflation.factor) * draw};
        }
    }
    return {win, draw};
}

// log-ratio at which the inflated win probability crosses the target.
double bisect_win(double product, const InflationModel& inflation, double target) {
    double lo = -1.0;
    double hi = 1.0;
    int guard = 0;
    while (true) {
        const double win = win_draw_at(product, lo, inflation).win;
        if (!std::isfinite(win))
            throw std::domain_error("win probability range is unreachable under this inflation");
        if (win <= target) break;
        lo *= 2.0;
        if (++guard > 60)
            throw std::domain_error("win probability range is unreachable under this inflation");
    }
    guard = 0;
    while (true) {
        const double win = win_draw_at(product, hi, inflation).win;
        if (!std::isfinite(win))
            throw std::domain_error("win probability range is unreachable under this inflation");
        if (win >= target) break;
        hi *= 2.0;
        if (++guard > 60)
            throw std::domain_error("win probability range is unreachable under this inflation");
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = (lo + hi) / 2.0;
        if (win_draw_at(product, mid, inflation).win < target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-13) break;
    }
    return (lo + hi) / 2.0;
}

} // namespace

std::vector<std::pair<double, double>> win_draw_curve(double rate_product,
                                                      const InflationModel& inflation,
                                                      int n_points) {
    if (!(rate_product > 0.0) || !std::isfinite(rate_product))
        throw std::domain_error("rate product must be positive and finite");
    inflation.validate();
    if (n_points < 2) throw std::domain_error("curve needs at least 2 points");

    const double lr_lo = bisect_win(rate_product, inflation, 0.05);
    const double lr_hi = bisect_win(rate_product, inflation, 0.85);

    std::vector<std::pair<double, double>> curve;
    curve.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double lr =
            lr_lo + (lr_hi - lr_lo) * static_cast<double>(i) / static_cast<double>(n_points - 1);
        const WinDraw wd = win_draw_at(rate_product, lr, inflation);
        curve.emplace_back(wd.win, wd.draw);
    }
    std::sort(curve.begin(), curve.end());
    return curve;
}

BucketReport bucket_calibration(const std::vector<std::pair<double, bool>>& games) {
    if (games.empty()) throw std::domain_error("bucket calibration needs at least one game");

    constexpr int n_buckets = 16;
    BucketReport report;
    report.edges.resize(n_buckets + 1);
    for (int i = 0; i <= n_buckets; ++i)
        report.edges[static_cast<std::size_t>(i)] = static_cast<double>(i + 1) / 20.0;
    report.counts.assign(n_buckets, 0);
    std::vector<long long> wins(n_buckets, 0);
    long long overflow_wins = 0;

    for (const auto& [p, won] : games) {
        if (!(p >= 0.0 && p <= 1.0))
            throw std::domain_error("implied win probability must lie in [0, 1]");
        // half-open buckets (lo, hi]: the bucket whose lower edge is the
        // largest edge strictly below p
        const auto it = std::lower_bound(report.edges.begin(), report.edges.end(), p);
        const long idx = (it - report.edges.begin()) - 1;
        if (p <= report.edges.front() || idx >= n_buckets) {
            ++report.overflow_count;
            overflow_wins += won ? 1 : 0;
            continue;
        }
        ++report.counts[static_cast<std::size_t>(idx)];
        wins[static_cast<std::size_t>(idx)] += won ? 1 : 0;
    }

    const double nan = std::numeric_limits<double>::quiet_NaN();
    report.freqs.assign(n_buckets, nan);
    for (int i = 0; i < n_buckets; ++i) {
        const auto u = static_cast<std::size_t>(i);
        if (report.counts[u] > 0)
            report.freqs[u] =
                static_cast<double>(wins[u]) / static_cast<double>(report.counts[u]);
    }
    report.overflow_freq = report.overflow_count > 0
                               ? static_cast<double>(overflow_wins) /
                                     static_cast<double>(report.overflow_count)
                               : nan;
    return report;
}

} // namespace skellam
