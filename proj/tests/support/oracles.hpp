// Independent reference implementations used only by tests. Each oracle is
// written against the mathematical definition, not the library code, so a
// shared bug would have to be introduced twice to go unnoticed.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using rational = boost::multiprecision::cpp_rational;

// I_n(x) by exact-rational partial summation of the defining series,
// sum_k (x/2)^(n+2k) / (k! (n+k)!), evaluated at rational x.
inline double bessel_i_series(int order, const rational& x, int terms = 60) {
    const rational half_x = x / 2;
    rational power = 1;
    for (int i = 0; i < order; ++i) power *= half_x;
    rational factorial_n = 1;
    for (int i = 2; i <= order; ++i) factorial_n *= i;

    rational sum = 0;
    rational term = power / factorial_n;
    for (int k = 0;;) {
        sum += term;
        if (++k >= terms) break;
        term *= half_x * half_x;
        term /= rational(k) * rational(order + k);
    }
    return static_cast<double>(sum);
}

inline double poisson_pmf_ref(long k, double rate) {
    if (rate == 0.0) return k == 0 ? 1.0 : 0.0;
    return std::exp(static_cast<double>(k) * std::log(rate) - rate -
                    std::lgamma(static_cast<double>(k) + 1.0));
}

// P(A - B = x) by direct convolution of two Poisson laws, truncated far
// enough past both means that the omitted tail is below double resolution.
inline double skellam_by_convolution(int x, double lambda_a, double lambda_b) {
    const long lo = std::max(0, x);
    const long hi = std::max<long>(
        {200, lo + 200,
         static_cast<long>(lambda_a + 40.0 * std::sqrt(lambda_a + 1.0) + 200.0)});
    double sum = 0.0;
    for (long k = lo; k <= hi; ++k)
        sum += poisson_pmf_ref(k, lambda_a) * poisson_pmf_ref(k - x, lambda_b);
    return sum;
}

// Everything the odds snapshot pipeline derives, recomputed with exact
// rational arithmetic end to end: implied probabilities, diagonal collapse,
// renormalization, moments, and the cone-projected rate estimates.
struct RationalPipeline {
    std::map<int, rational> dist;
    rational c = 0;
    rational vig = 0;
    rational mean = 0;
    rational variance = 0;
    rational lambda_a = 0;
    rational lambda_b = 0;
    rational residual_mean = 0;
    rational residual_var = 0;
};

struct OddsCell {
    int home = 0;
    int away = 0;
    std::int64_t num = 0;
    std::int64_t den = 1;
};

inline RationalPipeline rational_pipeline(const std::vector<OddsCell>& cells, int lead = 0) {
    RationalPipeline out;
    std::map<int, rational> mass;
    for (const auto& cell : cells) {
        const rational implied(cell.den, cell.den + cell.num);
        mass[cell.home - cell.away] += implied;
        out.c += implied;
    }
    if (out.c == 0) throw std::logic_error("oracle: zero implied mass");
    out.vig = out.c - 1;
    for (const auto& [k, m] : mass) out.dist[k] = m / out.c;

    for (const auto& [k, p] : out.dist) out.mean += k * p;
    for (const auto& [k, p] : out.dist) out.variance += (k - out.mean) * (k - out.mean) * p;

    const rational m = out.mean - lead;
    const rational v = out.variance;
    const rational abs_m = m < 0 ? rational(-m) : m;
    rational d = 0;
    rational s = 0;
    if (v >= abs_m) {
        d = m;
        s = v;
    } else if (v > -abs_m) {
        const rational u = (abs_m + v) / 2;
        d = m < 0 ? rational(-u) : u;
        s = u;
    }
    out.lambda_a = (s + d) / 2;
    out.lambda_b = (s - d) / 2;
    out.residual_mean = m - d;
    out.residual_var = v - s;
    return out;
}

// Exhaustive minimization of (m - (a-b))^2 + (v - (a+b))^2 over the full
// lattice a, b in {0, step, 2*step, ..., 10}.
struct GridMin {
    double lambda_a = 0;
    double lambda_b = 0;
    double objective = 0;
};

inline GridMin grid_search(double m, double v, double step = 1e-3) {
    const long n = std::lround(10.0 / step);
    GridMin best{0.0, 0.0, m * m + v * v};
    for (long ia = 0; ia <= n; ++ia) {
        const double a = static_cast<double>(ia) * step;
        const double p = m - a;
        const double q = v - a;
        double row_best = best.objective;
        long row_ib = -1;
        for (long ib = 0; ib <= n; ++ib) {
            const double b = static_cast<double>(ib) * step;
            const double da = p + b;
            const double dv = q - b;
            const double obj = da * da + dv * dv;
            if (obj < row_best) {
                row_best = obj;
                row_ib = ib;
            }
        }
        if (row_ib >= 0) {
            best.objective = row_best;
            best.lambda_a = a;
            best.lambda_b = static_cast<double>(row_ib) * step;
        }
    }
    return best;
}

// Sample mean and variance of a materialized distribution given as
// (value, probability) pairs.
inline std::pair<double, double> dist_moments(const std::vector<std::pair<int, double>>& pmf) {
    double mean = 0.0;
    for (const auto& [k, p] : pmf) mean += k * p;
    double var = 0.0;
    for (const auto& [k, p] : pmf) var += (k - mean) * (k - mean) * p;
    return {mean, var};
}

} // namespace oracle
