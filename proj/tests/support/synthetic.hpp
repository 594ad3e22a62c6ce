// Synthetic odds snapshots generated from a known scoring model, used for
// round-trip tests: quotes carry 60 fractional bits, so the implied
// probabilities reproduce the generating model to ~1e-12.
#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>

#include "skellam/odds.hpp"

namespace synthetic {

inline double poisson_pmf(int k, double rate) {
    if (rate == 0.0) return k == 0 ? 1.0 : 0.0;
    return std::exp(k * std::log(rate) - rate - std::lgamma(k + 1.0));
}

// Fair quotes for every score up to 40 goals a side whose model probability
// is at least 1e-15. Probabilities are quantized to p = m / 2^60 and quoted
// as the exact fraction (2^60 - m) / m.
inline skellam::OddsMatrix snapshot_from_rates(double lambda_a, double lambda_b,
                                               double min_prob = 1e-15) {
    constexpr std::int64_t scale = std::int64_t{1} << 60;
    skellam::OddsMatrix matrix;
    for (int a = 0; a <= 40; ++a) {
        const double pa = poisson_pmf(a, lambda_a);
        for (int b = 0; b <= 40; ++b) {
            const double p = pa * poisson_pmf(b, lambda_b);
            if (p < min_prob) continue;
            std::int64_t m = std::llround(p * static_cast<double>(scale));
            if (m < 1) m = 1;
            if (m >= scale) m = scale - 1;
            matrix.entries[{a, b}] = skellam::FractionalOdds{scale - m, m};
        }
    }
    return matrix;
}

inline void write_odds_file(const std::string& path, const skellam::OddsMatrix& matrix) {
    std::ofstream out(path, std::ios::binary);
    out << "home_goals,away_goals,numerator,denominator\n";
    for (const auto& [score, odds] : matrix.entries)
        out << score.first << ',' << score.second << ',' << odds.numerator << ','
            << odds.denominator << '\n';
}

} // namespace synthetic
