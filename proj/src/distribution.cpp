#include "skellam/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "skellam/bessel.hpp"

namespace skellam {

void ScoringRates::validate() const {
    if (!(std::isfinite(lambda_a) && lambda_a >= 0.0) ||
        !(std::isfinite(lambda_b) && lambda_b >= 0.0)) {
        throw std::domain_error("scoring rates must be finite and >= 0");
    }
}

double ScoreDiffDist::total_mass() const {
    double s = 0.0;
    for (double p : probs) s += p;
    return s;
}

void ScoreDiffDist::validate() const {
    if (probs.empty()) throw std::domain_error("difference distribution has empty support");
    for (double p : probs) {
        if (!(std::isfinite(p) && p >= 0.0))
            throw std::domain_error("difference distribution has an invalid probability");
    }
    if (std::abs(total_mass() - 1.0) > 1e-9)
        throw std::domain_error("difference distribution mass is not 1");
}

ScoreDiffDist ScoreDiffDist::normalized(int k_min, std::vector<double> probs) {
    double s = 0.0;
    for (double p : probs) {
        if (!(std::isfinite(p) && p >= 0.0))
            throw std::domain_error("cannot normalize: invalid probability");
        s += p;
    }
    if (!(s > 0.0)) throw std::domain_error("cannot normalize: zero total mass");
    for (double& p : probs) p /= s;
    return ScoreDiffDist{k_min, std::move(probs)};
}

namespace {

double poisson_pmf(int k, double lambda) {
    if (k < 0) return 0.0;
    if (lambda == 0.0) return k == 0 ? 1.0 : 0.0;
    return std::exp(static_cast<double>(k) * std::log(lambda) - lambda -
                    std::lgamma(static_cast<double>(k) + 1.0));
}

} // namespace

double skellam_pmf(int x, const ScoringRates& rates) {
    rates.validate();
    const double a = rates.lambda_a;
    const double b = rates.lambda_b;
    if (a == 0.0 && b == 0.0) return x == 0 ? 1.0 : 0.0;
    if (b == 0.0) return poisson_pmf(x, a);
    if (a == 0.0) return poisson_pmf(-x, b);
    // exp(-(a+b) + (x/2) log(a/b)) * I_|x|(2 sqrt(ab)); when the two factors
    // overflow in opposite directions their product is meaningless, so redo
    // the computation fully in log space
    const double log_scale = -(a + b) + 0.5 * static_cast<double>(x) * (std::log(a) - std::log(b));
    const double arg = 2.0 * std::sqrt(a * b);
    const double linear = std::exp(log_scale) * bessel_i(std::abs(x), arg);
    if (std::isfinite(linear)) return linear;
    return std::exp(log_scale + log_bessel_i(std::abs(x), arg));
}

namespace {

// Index of the largest PMF value; the distribution is unimodal so a scan of
// a mean-centered window (widened until the edges are negligible) finds it.
int pmf_mode(const ScoringRates& rates) {
    const double mean = std::clamp(rates.lambda_a - rates.lambda_b, -2.0e9, 2.0e9);
    int center = static_cast<int>(std::llround(mean));
    int best = center;
    double best_p = skellam_pmf(center, rates);
    for (int step = 1; step < 8; ++step) {
        for (int k : {center - step, center + step}) {
            double p = skellam_pmf(k, rates);
            if (p > best_p) {
                best_p = p;
                best = k;
            }
        }
    }
    return best;
}

} // namespace

ScoreDiffDist skellam_dist(const ScoringRates& rates, double tail_eps) {
    rates.validate();
    if (!(tail_eps > 0.0 && tail_eps < 1.0))
        throw std::domain_error("tail_eps must be in (0, 1)");
    if (rates.lambda_a == 0.0 && rates.lambda_b == 0.0)
        return ScoreDiffDist{0, {1.0}};

    const int mode = pmf_mode(rates);
    double inside = skellam_pmf(mode, rates);
    std::vector<double> low;  // mode-1, mode-2, ...
    std::vector<double> high; // mode+1, mode+2, ...
    int width = 0;
    // Cap far beyond any mass representable in double precision, in case
    // tail_eps is below the accumulation resolution.
    const double want = 64.0 + 40.0 * std::sqrt(rates.lambda_a + rates.lambda_b);
    const int max_width = want > 1e9 ? 1000000000 : static_cast<int>(want);
    while (1.0 - inside >= tail_eps && width < max_width) {
        ++width;
        low.push_back(skellam_pmf(mode - width, rates));
        high.push_back(skellam_pmf(mode + width, rates));
        inside += low.back() + high.back();
    }

    std::vector<double> probs;
    probs.reserve(2 * static_cast<std::size_t>(width) + 1);
    for (int i = width - 1; i >= 0; --i) probs.push_back(low[static_cast<std::size_t>(i)]);
    probs.push_back(skellam_pmf(mode, rates));
    for (int i = 0; i < width; ++i) probs.push_back(high[static_cast<std::size_t>(i)]);
    return ScoreDiffDist::normalized(mode - width, std::move(probs));
}

namespace {

// Smallest x with P(X > x) below eps, found by walking right from the mode.
int upper_tail_cutoff(const ScoringRates& rates, double eps) {
    const double sd = std::sqrt(rates.lambda_a + rates.lambda_b);
    int x = pmf_mode(rates);
    double p = skellam_pmf(x, rates);
    // Geometric bound: past mean + a few sd the term ratio is < 1/2, so the
    // remaining tail is below twice the next term.
    const double cap = static_cast<double>(x) + 64.0 + 40.0 * sd;
    const int hard_cap = cap > 2.0e9 ? 2000000000 : static_cast<int>(cap);
    while (x < hard_cap) {
        ++x;
        p = skellam_pmf(x, rates);
        if (2.0 * p < eps && x > rates.lambda_a - rates.lambda_b + 4.0 * sd) break;
    }
    return x;
}

} // namespace

double prob_win(const ScoringRates& rates, int lead) {
    rates.validate();
    if (rates.lambda_a == 0.0 && rates.lambda_b == 0.0) return lead > 0 ? 1.0 : 0.0;

    const double mean = rates.lambda_a - rates.lambda_b;
    const double sd = std::sqrt(rates.lambda_a + rates.lambda_b);
    const double threshold = static_cast<double>(-lead) + 1.0; // win iff diff >= threshold
    // Past max(16 sd, 128) from the mean the tail is below double resolution
    // (Bennett's inequality leaves less than 1e-33), so clamp to the limit.
    const double margin = std::max(16.0 * sd, 128.0);
    if (mean - threshold > margin) return 1.0;
    if (threshold - mean > margin) return 0.0;
    // Summing the PMF costs O(sd) terms; past any physically meaningful rate
    // switch to the normal approximation (error below 1e-3 at the gate and
    // shrinking as 1/sd beyond it).
    if (rates.lambda_a + rates.lambda_b > 1e6)
        return 0.5 * std::erfc((threshold - 0.5 - mean) / (sd * std::sqrt(2.0)));

    const int hi = upper_tail_cutoff(rates, 1e-15);
    double sum = 0.0;
    for (int x = hi; x >= -lead + 1; --x) sum += skellam_pmf(x, rates);
    return std::min(sum, 1.0);
}

double prob_draw(const ScoringRates& rates, int lead) {
    return skellam_pmf(-lead, rates);
}

double prob_lose(const ScoringRates& rates, int lead) {
    return std::max(0.0, 1.0 - prob_win(rates, lead) - prob_draw(rates, lead));
}

double draw_prob_even(double lambda) {
    return skellam_pmf(0, ScoringRates{lambda, lambda});
}

std::pair<double, double> skellam_moments(const ScoringRates& rates, int lead) {
    rates.validate();
    return {static_cast<double>(lead) + rates.lambda_a - rates.lambda_b,
            rates.lambda_a + rates.lambda_b};
}

} // namespace skellam
