#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include <doctest.h>

#include "support/approx.hpp"

#include "skellam/diagnostics.hpp"
#include "skellam/distribution.hpp"
#include "skellam/odds.hpp"

#include "support/fixtures.hpp"

using namespace skellam;

namespace {

double interpolate_draw(const std::vector<std::pair<double, double>>& curve, double win) {
    auto it = std::lower_bound(curve.begin(), curve.end(), std::make_pair(win, -1.0));
    if (it == curve.begin()) return it->second;
    if (it == curve.end()) return curve.back().second;
    const auto& [x1, y1] = *(it - 1);
    const auto& [x2, y2] = *it;
    const double f = (win - x1) / (x2 - x1);
    return y1 + f * (y2 - y1);
}

} // namespace

TEST_CASE("comparing a model against itself is exact") {
    const ScoringRates rates{1.9, 1.1};
    const ScoreDiffDist market = skellam_dist(rates, 1e-9);
    const auto rows = compare(market, rates);
    REQUIRE(rows.size() == market.probs.size());
    for (const auto& row : rows)
        CHECK(row.market_prob ==
              absolute(row.model_prob, 1e-9));
}

TEST_CASE("comparison rows cover the market support and both columns sum to one") {
    const ScoreDiffDist market = market_score_diff(fixtures::everton_west_ham_matrix()).dist;
    const auto rows = compare(market, {2.33, 1.44});
    REQUIRE(rows.size() == 14);
    CHECK(rows.front().score_diff == -5);
    CHECK(rows.back().score_diff == 8);

    double market_sum = 0.0;
    double model_sum = 0.0;
    for (const auto& row : rows) {
        market_sum += row.market_prob;
        model_sum += row.model_prob;
    }
    CHECK(market_sum == absolute(1.0, 1e-9));
    CHECK(model_sum == absolute(1.0, 1e-9));
}

TEST_CASE("market-to-model gap on the bundled snapshot") {
    // Root-mean-square gap between the two columns over the central
    // differences -4..+5, a summary of how closely the market tracks the
    // two-rate model on this game.
    const ScoreDiffDist market = market_score_diff(fixtures::everton_west_ham_matrix()).dist;
    const auto rows = compare(market, {2.33, 1.44});
    double sq = 0.0;
    int n = 0;
    for (const auto& row : rows) {
        if (row.score_diff < -4 || row.score_diff > 5) continue;
        sq += (row.market_prob - row.model_prob) * (row.market_prob - row.model_prob);
        ++n;
    }
    REQUIRE(n == 10);
    CHECK(std::sqrt(sq / n) == absolute(0.011, 0.002));
}

TEST_CASE("identical probability lists produce diagonal quantile points") {
    std::vector<std::pair<double, double>> pairs;
    for (double p : {0.1, 0.25, 0.4, 0.55, 0.7, 0.85}) pairs.emplace_back(p, p);
    const QqResult qq = qq_log_odds(pairs);
    CHECK(qq.excluded == 0);
    REQUIRE(qq.points.size() == pairs.size());
    for (const auto& [mq, sq] : qq.points) CHECK(mq == sq);
}

TEST_CASE("quantile points are sorted per column, not per pair") {
    std::vector<std::pair<double, double>> pairs = {{0.2, 0.6}, {0.5, 0.1}, {0.8, 0.35}};
    const QqResult qq = qq_log_odds(pairs);
    REQUIRE(qq.points.size() == 3);
    for (std::size_t i = 1; i < qq.points.size(); ++i) {
        CHECK(qq.points[i].first >= qq.points[i - 1].first);
        CHECK(qq.points[i].second >= qq.points[i - 1].second);
    }
}

TEST_CASE("quantile transform excludes certainties and counts them") {
    std::vector<std::pair<double, double>> pairs = {
        {0.3, 0.4}, {0.0, 0.5}, {0.6, 1.0}, {0.2, 0.2}};
    const QqResult qq = qq_log_odds(pairs);
    CHECK(qq.excluded == 2);
    CHECK(qq.points.size() == 2);
}

TEST_CASE("quantile transform is permutation invariant") {
    std::vector<std::pair<double, double>> pairs;
    std::mt19937 shuffler(17);
    for (int i = 1; i <= 30; ++i)
        pairs.emplace_back(i / 31.0, 1.0 / (1.0 + i));
    const QqResult base = qq_log_odds(pairs);
    std::shuffle(pairs.begin(), pairs.end(), shuffler);
    const QqResult shuffled = qq_log_odds(pairs);
    CHECK(base.points == shuffled.points);
    CHECK(base.excluded == shuffled.excluded);
}

TEST_CASE("a full-size pair list passes through untruncated") {
    std::vector<std::pair<double, double>> pairs;
    for (int i = 1; i <= 238; ++i)
        pairs.emplace_back(i / 240.0, (241 - i) / 242.0);
    const QqResult qq = qq_log_odds(pairs);
    CHECK(qq.excluded == 0);
    CHECK(qq.points.size() == 238);
}

TEST_CASE("heavier model tail puts the top quantile pair off the diagonal") {
    const auto& market = fixtures::reference_market_pct();
    const auto& model = fixtures::reference_model_pct();
    std::vector<std::pair<double, double>> pairs;
    for (std::size_t i = 0; i < market.size(); ++i)
        pairs.emplace_back(market[i] / 100.0, model[i] / 100.0);
    const QqResult qq = qq_log_odds(pairs);
    REQUIRE(qq.points.size() == 10);
    CHECK(qq.points.back().second > qq.points.back().first);
}

TEST_CASE("quantile transform rejects probabilities outside [0, 1]") {
    CHECK_THROWS_AS(qq_log_odds({{1.2, 0.5}}), std::domain_error);
    CHECK_THROWS_AS(qq_log_odds({{0.5, -0.1}}), std::domain_error);
}

TEST_CASE("win/draw curve shape") {
    const auto curve = win_draw_curve(1.8, {});
    REQUIRE(curve.size() == 401);

    CHECK(curve.front().first <= 0.05 + 1e-9);
    CHECK(curve.back().first >= 0.85 - 1e-9);
    for (std::size_t i = 1; i < curve.size(); ++i) CHECK(curve[i].first > curve[i - 1].first);

    // single peak: draws rise to a maximum and fall after it
    const auto peak = std::max_element(
        curve.begin(), curve.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    for (auto it = curve.begin(); it + 1 < peak; ++it) CHECK(it->second < (it + 1)->second);
    for (auto it = peak; it + 1 < curve.end(); ++it) CHECK(it->second > (it + 1)->second);
}

TEST_CASE("the uninflated curve peaks where the teams are even") {
    const double d0 = draw_prob_even(std::sqrt(1.8));
    const auto curve = win_draw_curve(1.8, {});

    // at the point where win == lose, draw equals the even-teams value
    const auto even = std::min_element(
        curve.begin(), curve.end(), [](const auto& a, const auto& b) {
            return std::fabs(2.0 * a.first + a.second - 1.0) <
                   std::fabs(2.0 * b.first + b.second - 1.0);
        });
    CHECK(even->second == absolute(d0, 1e-4));
    // the curve samples win on a ~0.002 grid, so the argmin sits up to a
    // full step away from the true even point
    CHECK(even->first ==
          absolute((1.0 - d0) / 2.0, 2.5e-3));

    const auto peak = std::max_element(
        curve.begin(), curve.end(),
        [](const auto& a, const auto& b) { return a.second < b.second; });
    CHECK(peak->second == absolute(d0, 1e-4));
}

TEST_CASE("draw boosts lift the whole curve") {
    const auto base = win_draw_curve(1.8, {});
    const auto boosted = win_draw_curve(1.8, {InflationKind::TypeTwo, 0.3});
    for (double win = 0.06; win <= 0.84; win += 0.02)
        CHECK(interpolate_draw(base, win) < interpolate_draw(boosted, win));
}

TEST_CASE("mixture and draw-boost curves matched at the peak differ elsewhere") {
    const double d0 = draw_prob_even(std::sqrt(1.8));
    const double p = 0.1;
    const double theta = p * (1.0 - d0) / d0;
    const auto mixture = win_draw_curve(1.8, {InflationKind::TypeOne, p});
    const auto boost = win_draw_curve(1.8, {InflationKind::TypeTwo, theta});

    const auto peak_draw = [](const std::vector<std::pair<double, double>>& c) {
        return std::max_element(c.begin(), c.end(), [](const auto& a, const auto& b) {
                   return a.second < b.second;
               })->second;
    };
    CHECK(peak_draw(mixture) ==
          absolute(peak_draw(boost), 1e-3));
    CHECK(std::fabs(interpolate_draw(mixture, 0.10) - interpolate_draw(boost, 0.10)) > 5e-4);
    CHECK(std::fabs(interpolate_draw(mixture, 0.70) - interpolate_draw(boost, 0.70)) > 5e-4);
}

TEST_CASE("curve input validation") {
    CHECK_THROWS_AS(win_draw_curve(0.0, {}), std::domain_error);
    CHECK_THROWS_AS(win_draw_curve(-1.0, {}), std::domain_error);
    CHECK_THROWS_AS(win_draw_curve(1.8, {}, 1), std::domain_error);
    // a heavy mixture weight caps the reachable win probability below 0.85
    CHECK_THROWS_AS(win_draw_curve(1.8, {InflationKind::TypeOne, 0.4}), std::domain_error);
}

TEST_CASE("uniform forecasts bucket to their empirical frequency") {
    std::vector<std::pair<double, bool>> games;
    for (int i = 0; i < 50; ++i) games.emplace_back(0.62, i < 31);
    const BucketReport report = bucket_calibration(games);

    REQUIRE(report.edges.size() == 17);
    REQUIRE(report.counts.size() == 16);
    CHECK(report.edges.front() == 0.05);
    CHECK(report.edges.back() == 0.85);

    // 0.62 lands in (0.60, 0.65]
    CHECK(report.counts[11] == 50);
    CHECK(report.freqs[11] == doctest::Approx(0.62).epsilon(1e-15));
    for (int i = 0; i < 16; ++i) {
        if (i == 11) continue;
        CHECK(report.counts[i] == 0);
        CHECK(std::isnan(report.freqs[i]));
    }
    CHECK(report.overflow_count == 0);
    CHECK(std::isnan(report.overflow_freq));
}

TEST_CASE("bucket edges are half-open on the left") {
    std::vector<std::pair<double, bool>> games = {
        {0.05, true},  // at the bottom edge: outside
        {0.051, true}, // first bucket
        {0.10, false}, // still the first bucket
        {0.101, true}, // second bucket
        {0.85, true},  // last bucket
        {0.851, true}, // beyond the last edge: outside
        {0.9, false},  {0.01, true}};
    const BucketReport report = bucket_calibration(games);
    CHECK(report.counts[0] == 2);
    CHECK(report.counts[1] == 1);
    CHECK(report.counts[15] == 1);
    CHECK(report.overflow_count == 4);
    CHECK(report.overflow_freq == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("bucket calibration input validation") {
    CHECK_THROWS_AS(bucket_calibration({}), std::domain_error);
    CHECK_THROWS_AS(bucket_calibration({{1.5, true}}), std::domain_error);
    CHECK_THROWS_AS(bucket_calibration({{-0.5, false}}), std::domain_error);
}
