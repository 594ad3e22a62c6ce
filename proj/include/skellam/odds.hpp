#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "skellam/distribution.hpp"

namespace skellam {

/// Bookmaker quote a/b: a units of profit per b staked.
struct FractionalOdds {
    std::int64_t numerator = 0;
    std::int64_t denominator = 1;

    bool operator==(const FractionalOdds&) const = default;

    /// Throws std::domain_error on numerator < 0 or denominator < 1.
    void validate() const;
};

/// Correct-score market snapshot: quotes keyed by (home goals, away goals).
/// Scores without a quote carry zero probability.
struct OddsMatrix {
    std::map<std::pair<int, int>, FractionalOdds> entries;
};

/// Game clock fraction and current score.
struct GameState {
    double t = 0.0;
    int score_a = 0;
    int score_b = 0;

    int lead() const { return score_a - score_b; }

    /// Throws std::domain_error unless t is in [0,1] and scores are >= 0.
    void validate() const;
};

/// Probability implied by a quote: denominator / (denominator + numerator).
double implied_prob(const FractionalOdds& odds);

/// Sub-game market: rekeys each final-score quote (i, j) to the remaining
/// goals (i - score_a, j - score_b), dropping quotes below the current score.
/// Throws degenerate_error("no quotable sub-game outcomes") if nothing is left.
OddsMatrix adjust_for_state(const OddsMatrix& matrix, const GameState& state);

struct MarketDist {
    ScoreDiffDist dist;
    double vig = 0.0;
};

/// Sums implied probabilities along the score-difference anti-diagonals of the
/// matrix and normalizes by their grand total c. The support is the full range
/// [min quoted difference, max quoted difference]; vig = c - 1.
MarketDist market_score_diff(const OddsMatrix& matrix);

/// Mean and variance of a normalized difference distribution, computed as
/// sum k*P(k) and sum k^2*P(k) - mean^2.
std::pair<double, double> market_moments(const ScoreDiffDist& dist);

} // namespace skellam
