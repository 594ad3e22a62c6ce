#pragma once

#include <utility>
#include <vector>

namespace skellam {

/// Expected goals for each team over the remainder of a game.
struct ScoringRates {
    double lambda_a = 0.0;
    double lambda_b = 0.0;

    /// Throws std::domain_error unless both rates are finite and >= 0.
    void validate() const;
};

/// Probability distribution over a contiguous range of integer score
/// differences [k_min, k_min + probs.size() - 1].
struct ScoreDiffDist {
    int k_min = 0;
    std::vector<double> probs;

    int k_max() const { return k_min + static_cast<int>(probs.size()) - 1; }
    bool contains(int k) const { return k >= k_min && k <= k_max(); }

    /// Mass at k; zero outside the support.
    double prob(int k) const { return contains(k) ? probs[static_cast<std::size_t>(k - k_min)] : 0.0; }

    double total_mass() const;

    /// Throws std::domain_error if the support is empty, a probability is
    /// negative or non-finite, or the mass is further than 1e-9 from 1.
    void validate() const;

    /// Rescales to total mass exactly 1. Throws on zero or negative mass.
    static ScoreDiffDist normalized(int k_min, std::vector<double> probs);
};

/// P(difference = x) for the difference of two independent Poisson counts.
/// One zero rate degenerates to a (negated) Poisson PMF, two zero rates to a
/// point mass at 0; the Bessel closed form is only used for positive rates.
double skellam_pmf(int x, const ScoringRates& rates);

/// Materializes the PMF over the smallest contiguous support symmetric about
/// the mode whose excluded mass is below tail_eps, then renormalizes.
ScoreDiffDist skellam_dist(const ScoringRates& rates, double tail_eps = 1e-9);

/// P(final difference > 0) given the current lead and remaining-game rates.
/// Exact PMF sum for ordinary rates; clamps to 0/1 when the threshold sits
/// more than max(16 sd, 128) from the mean, and uses a continuity-corrected
/// normal approximation when lambda_a + lambda_b exceeds 1e6.
double prob_win(const ScoringRates& rates, int lead);
/// P(final difference = 0) given the current lead: the PMF at -lead.
double prob_draw(const ScoringRates& rates, int lead);
/// Complement of win and draw.
double prob_lose(const ScoringRates& rates, int lead);

/// Draw probability for two evenly matched teams with rate lambda each.
double draw_prob_even(double lambda);

/// Closed-form mean and variance of the final score difference:
/// (lead + lambda_a - lambda_b, lambda_a + lambda_b).
std::pair<double, double> skellam_moments(const ScoringRates& rates, int lead);

} // namespace skellam
