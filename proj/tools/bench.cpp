// skellam-bench: times the parallel kernels against their serial reference
// implementations and checks that both produce identical results.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "skellam/calibration.hpp"
#include "skellam/distribution.hpp"
#include "skellam/odds.hpp"
#include "skellam/simulation.hpp"

namespace {

using namespace skellam;
using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

bool same_dist(const ScoreDiffDist& a, const ScoreDiffDist& b) {
    if (a.k_min != b.k_min || a.probs.size() != b.probs.size()) return false;
    for (std::size_t i = 0; i < a.probs.size(); ++i)
        if (a.probs[i] != b.probs[i]) return false;
    return true;
}

// Synthetic odds snapshots: quote every model score up to 12 goals a side at
// fair fractional odds, so each snapshot calibrates back to known rates.
OddsMatrix synthetic_snapshot(double lambda_a, double lambda_b) {
    OddsMatrix matrix;
    for (int a = 0; a <= 12; ++a) {
        for (int b = 0; b <= 12; ++b) {
            const double pa = std::exp(a * std::log(lambda_a) - lambda_a - std::lgamma(a + 1.0));
            const double pb = std::exp(b * std::log(lambda_b) - lambda_b - std::lgamma(b + 1.0));
            const double p = pa * pb;
            if (p < 1e-9) continue;
            const auto num = static_cast<std::int64_t>(std::llround((1.0 - p) / p * 1e6));
            matrix.entries[{a, b}] = FractionalOdds{num > 0 ? num : 1, 1000000};
        }
    }
    return matrix;
}

bool same_timeline(const std::vector<TimelinePoint>& a, const std::vector<TimelinePoint>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].result.rates.lambda_a != b[i].result.rates.lambda_a) return false;
        if (a[i].result.rates.lambda_b != b[i].result.rates.lambda_b) return false;
        if (a[i].result.implied_vol != b[i].result.implied_vol) return false;
    }
    return true;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp: %d thread(s)\n", omp_get_max_threads());
#else
    std::printf("openmp: not compiled in; parallel mode falls back to serial\n");
#endif

    // Kernel 1: terminal score-difference ensemble.
    {
        const ScoringRates rates{2.33, 1.44};
        const GameState start{};
        const std::uint64_t n_paths = 2000000;
        const std::uint64_t seed = 20160305;

        auto t0 = clock_type::now();
        const auto serial = simulate_final_dist(rates, start, n_paths, seed, ExecMode::Serial);
        const double serial_s = seconds_since(t0);

        t0 = clock_type::now();
        const auto parallel = simulate_final_dist(rates, start, n_paths, seed, ExecMode::Parallel);
        const double parallel_s = seconds_since(t0);

        std::printf("simulate_final_dist %llu paths: serial %.3fs, parallel %.3fs (x%.2f), %s\n",
                    static_cast<unsigned long long>(n_paths), serial_s, parallel_s,
                    serial_s / parallel_s, same_dist(serial, parallel) ? "identical" : "MISMATCH");
        if (!same_dist(serial, parallel)) return 1;
    }

    // Kernel 2: batch calibration across a timeline of snapshots.
    {
        std::vector<std::pair<GameState, OddsMatrix>> snapshots;
        for (int i = 0; i < 64; ++i) {
            const double t = i / 80.0;
            GameState state{t, 0, 0};
            snapshots.emplace_back(state, synthetic_snapshot(2.33 * (1.0 - t) + 0.02 * i,
                                                             1.44 * (1.0 - t) + 0.01 * i));
        }

        auto t0 = clock_type::now();
        const auto serial = calibrate_timeline(snapshots, ExecMode::Serial);
        const double serial_s = seconds_since(t0);

        t0 = clock_type::now();
        const auto parallel = calibrate_timeline(snapshots, ExecMode::Parallel);
        const double parallel_s = seconds_since(t0);

        std::printf("calibrate_timeline %zu snapshots: serial %.3fs, parallel %.3fs (x%.2f), %s\n",
                    snapshots.size(), serial_s, parallel_s, serial_s / parallel_s,
                    same_timeline(serial, parallel) ? "identical" : "MISMATCH");
        if (!same_timeline(serial, parallel)) return 1;
    }

    return 0;
}
