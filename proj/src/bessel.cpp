#include "skellam/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace skellam {

double bessel_i(int order, double x) {
    if (order < 0) throw std::domain_error("bessel_i: negative order");
    if (x < 0.0 || !std::isfinite(x)) throw std::domain_error("bessel_i: x must be finite and >= 0");

    // term_0 = (x/2)^order / order!
    double term = 1.0;
    const double half = x / 2.0;
    for (int j = 1; j <= order; ++j) term *= half / static_cast<double>(j);

    double sum = term;
    const double q = x * x / 4.0;
    for (int k = 1;; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(order + k));
        sum += term;
        if (term <= 1e-16 * sum) break; // also terminates the exact-zero x = 0 case
    }
    return sum;
}

double log_bessel_i(int order, double x) {
    if (order < 0) throw std::domain_error("bessel_i: negative order");
    if (x < 0.0 || !std::isfinite(x)) throw std::domain_error("bessel_i: x must be finite and >= 0");
    if (x == 0.0) return order == 0 ? 0.0 : -std::numeric_limits<double>::infinity();

    // log of term_0, factored out of the series
    const double log_lead = static_cast<double>(order) * std::log(x / 2.0) -
                            std::lgamma(static_cast<double>(order) + 1.0);

    // With term_0 factored out the terms start at 1, but for large x they
    // climb far past the double range before decaying, so the accumulator is
    // renormalized into an exponent offset whenever it grows too large.
    const double q = x * x / 4.0;
    double term = 1.0;
    double sum = 1.0;
    long renorms = 0;
    for (int k = 1;; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(order + k));
        sum += term;
        if (term <= 1e-16 * sum) break;
        if (sum > 1e280) {
            sum *= 1e-280;
            term *= 1e-280;
            ++renorms;
        }
    }
    // one multiplication instead of repeated addition keeps the offset exact
    const double offset = static_cast<double>(renorms) * (280.0 * std::log(10.0));
    return log_lead + offset + std::log(sum);
}

} // namespace skellam
