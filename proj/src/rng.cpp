#include "skellam/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace skellam {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) + index);
}

long Rng::poisson(double rate) {
    if (!(rate >= 0.0) || !std::isfinite(rate))
        throw std::domain_error("poisson rate must be finite and >= 0");
    long total = 0;
    // Chunking keeps exp(-rate) away from underflow; counts add by the
    // superposition property.
    while (rate > 500.0) {
        total += poisson(500.0);
        rate -= 500.0;
    }
    const double limit = std::exp(-rate);
    long k = 0;
    double product = uniform();
    while (product > limit) {
        ++k;
        product *= uniform();
    }
    return total + k;
}

} // namespace skellam
