// Shared fixtures: the bundled Everton - West Ham odds snapshot (with the
// 50/0 quote corrected to 50/1), and the reference values this dataset is
// known to produce, used by comparison and acceptance tests.
#pragma once

#include <cstdint>
#include <vector>

#include "skellam/odds.hpp"

#include "oracles.hpp"

namespace fixtures {

struct QuoteCell {
    int home;
    int away;
    std::int64_t num;
    std::int64_t den;
};

// Correct-score quotes for Everton vs West Ham, 2016-03-05, pre-game.
inline const std::vector<QuoteCell>& everton_west_ham_quotes() {
    static const std::vector<QuoteCell> quotes = {
        {0, 0, 11, 1},  {0, 1, 12, 1},  {0, 2, 28, 1},  {0, 3, 66, 1},  {0, 4, 200, 1},
        {0, 5, 450, 1}, {1, 0, 13, 2},  {1, 1, 6, 1},   {1, 2, 14, 1},  {1, 3, 40, 1},
        {1, 4, 100, 1}, {1, 5, 350, 1}, {2, 0, 7, 1},   {2, 1, 7, 1},   {2, 2, 14, 1},
        {2, 3, 40, 1},  {2, 4, 125, 1}, {2, 5, 225, 1}, {3, 0, 11, 1},  {3, 1, 11, 1},
        {3, 2, 20, 1},  {3, 3, 50, 1},  {3, 4, 125, 1}, {3, 5, 275, 1}, {4, 0, 22, 1},
        {4, 1, 22, 1},  {4, 2, 40, 1},  {4, 3, 100, 1}, {4, 4, 250, 1}, {4, 5, 500, 1},
        {5, 0, 50, 1},  {5, 1, 50, 1},  {5, 2, 90, 1},  {5, 3, 150, 1}, {5, 4, 400, 1},
        {6, 0, 100, 1}, {6, 1, 100, 1}, {6, 2, 200, 1}, {6, 3, 250, 1}, {7, 0, 250, 1},
        {7, 1, 275, 1}, {7, 2, 375, 1}, {8, 0, 325, 1}, {8, 1, 475, 1}};
    return quotes;
}

inline skellam::OddsMatrix everton_west_ham_matrix() {
    skellam::OddsMatrix matrix;
    for (const auto& q : everton_west_ham_quotes())
        matrix.entries[{q.home, q.away}] = skellam::FractionalOdds{q.num, q.den};
    return matrix;
}

inline std::vector<oracle::OddsCell> everton_west_ham_oracle_cells() {
    std::vector<oracle::OddsCell> cells;
    for (const auto& q : everton_west_ham_quotes())
        cells.push_back({q.home, q.away, q.num, q.den});
    return cells;
}

// Reference probability rows for this snapshot (score differences -4..+5,
// in percent): the market row is the vig-normalized implied distribution,
// the model row is the plain pmf at rates (2.33, 1.44).
inline const std::vector<int>& reference_diffs() {
    static const std::vector<int> diffs = {-4, -3, -2, -1, 0, 1, 2, 3, 4, 5};
    return diffs;
}

inline const std::vector<double>& reference_market_pct() {
    static const std::vector<double> row = {1.70,  2.03,  4.88, 12.33, 21.93,
                                            22.06, 16.58, 9.82, 4.72,  2.23};
    return row;
}

inline const std::vector<double>& reference_model_pct() {
    static const std::vector<double> row = {0.78,  2.50,  6.47,  13.02, 19.50,
                                            21.08, 16.96, 10.61, 5.37,  2.27};
    return row;
}

inline constexpr double reference_lambda_a = 2.33;
inline constexpr double reference_lambda_b = 1.44;

// In-play reference path for the same game, sampled every 10 minutes of a
// 90-minute clock. per_rem_* are the fitted remaining-game rates divided by
// (1 - t); sigma is the implied volatility of the remaining score difference.
struct MinuteRow {
    int minute;
    double per_rem_a;
    double per_rem_b;
    double per_rem_sum;
    double sigma;
};

inline const std::vector<MinuteRow>& reference_minute_rows() {
    static const std::vector<MinuteRow> rows = {
        {0, 2.33, 1.44, 3.78, 1.94},  {10, 2.51, 1.47, 3.98, 1.88}, {20, 2.53, 1.59, 4.12, 1.79},
        {30, 2.46, 1.85, 4.31, 1.70}, {40, 1.89, 2.17, 4.06, 1.50}, {45, 1.85, 2.17, 4.02, 1.42},
        {55, 2.12, 2.56, 4.68, 1.35}, {65, 2.12, 2.90, 5.03, 1.18}, {75, 2.61, 3.67, 6.28, 1.02},
        {85, 4.61, 5.92, 10.52, 0.76}, {90, 0.0, 0.0, 0.0, 0.0}};
    return rows;
}

inline constexpr int game_minutes = 90;

} // namespace fixtures
