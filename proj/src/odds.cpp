#include "skellam/odds.hpp"

#include <cmath>
#include <stdexcept>

#include "skellam/errors.hpp"

namespace skellam {

void FractionalOdds::validate() const {
    if (numerator < 0) throw std::domain_error("odds numerator must be >= 0");
    if (denominator < 1) throw std::domain_error("odds denominator must be >= 1");
}

void GameState::validate() const {
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("game clock t must be in [0, 1]");
    if (score_a < 0 || score_b < 0) throw std::domain_error("scores must be >= 0");
}

double implied_prob(const FractionalOdds& odds) {
    odds.validate();
    return static_cast<double>(odds.denominator) /
           static_cast<double>(odds.denominator + odds.numerator);
}

OddsMatrix adjust_for_state(const OddsMatrix& matrix, const GameState& state) {
    state.validate();
    OddsMatrix out;
    for (const auto& [score, odds] : matrix.entries) {
        const int x = score.first - state.score_a;
        const int y = score.second - state.score_b;
        if (x >= 0 && y >= 0) out.entries.emplace(std::make_pair(x, y), odds);
    }
    if (out.entries.empty()) throw degenerate_error("no quotable sub-game outcomes");
    return out;
}

MarketDist market_score_diff(const OddsMatrix& matrix) {
    if (matrix.entries.empty()) throw std::domain_error("odds matrix is empty");

    int k_min = 0;
    int k_max = 0;
    bool first = true;
    for (const auto& [score, odds] : matrix.entries) {
        const int k = score.first - score.second;
        k_min = first ? k : std::min(k_min, k);
        k_max = first ? k : std::max(k_max, k);
        first = false;
    }

    std::vector<double> mass(static_cast<std::size_t>(k_max - k_min) + 1, 0.0);
    for (const auto& [score, odds] : matrix.entries) {
        mass[static_cast<std::size_t>(score.first - score.second - k_min)] += implied_prob(odds);
    }
    double c = 0.0;
    for (double m : mass) c += m;
    if (!(c > 0.0)) throw std::domain_error("odds matrix carries no probability mass");
    for (double& m : mass) m /= c;
    return MarketDist{ScoreDiffDist{k_min, std::move(mass)}, c - 1.0};
}

std::pair<double, double> market_moments(const ScoreDiffDist& dist) {
    dist.validate();
    double mean = 0.0;
    for (int k = dist.k_min; k <= dist.k_max(); ++k)
        mean += static_cast<double>(k) * dist.prob(k);
    double second = 0.0;
    for (int k = dist.k_min; k <= dist.k_max(); ++k)
        second += static_cast<double>(k) * static_cast<double>(k) * dist.prob(k);
    return {mean, second - mean * mean};
}

} // namespace skellam
