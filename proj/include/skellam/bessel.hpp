#pragma once

namespace skellam {

/// Modified Bessel function of the first kind, integer order.
/// Direct power series; terms are added until one falls below 1e-16 of the
/// running sum. Throws std::domain_error for order < 0 or x < 0.
double bessel_i(int order, double x);

/// log(bessel_i(order, x)), usable where the value itself would overflow or
/// underflow a double (large order or large argument). Same series and
/// termination rule, accumulated with an exponent offset. Returns -infinity
/// for x = 0 with order > 0.
double log_bessel_i(int order, double x);

} // namespace skellam
