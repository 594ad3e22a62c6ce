#pragma once

#include <cstdint>
#include <random>

namespace skellam {

/// SplitMix64 output function; used to decorrelate seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for an independent per-item stream derived from a master seed.
std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index);

/// Deterministic generator used by all simulation code: a seeded mt19937_64
/// with fixed output transforms, so results are identical on any platform.
/// The std::distribution adaptors are deliberately not used; their output is
/// implementation defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw in (0, 1]: (x >> 11 + 1) * 2^-53.
    double uniform() {
        return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
    }

    /// Poisson count by the product-of-uniforms method, splitting rates above
    /// 500 into chunks so exp(-rate) stays representable.
    long poisson(double rate);

private:
    std::mt19937_64 engine_;
};

} // namespace skellam
