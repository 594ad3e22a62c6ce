#pragma once

#include <cstdint>
#include <vector>

#include "skellam/distribution.hpp"
#include "skellam/exec.hpp"
#include "skellam/odds.hpp"

namespace skellam {

/// One simulated score-difference path over the remainder of a game:
/// +1 jumps for home goals, -1 for away goals, times strictly increasing
/// within (start_time, 1].
struct ScorePath {
    double start_time = 0.0;
    int start_diff = 0;
    std::vector<double> jump_times;
    std::vector<int> jump_signs;

    int terminal_diff() const {
        int d = start_diff;
        for (int s : jump_signs) d += s;
        return d;
    }
};

/// Simulates the two goal processes on (start.t, 1] as homogeneous Poisson
/// processes with the given remaining-game rates: counts first, then jump
/// times as uniform order statistics. Deterministic for a given seed.
ScorePath simulate_path(const ScoringRates& rates, const GameState& start, std::uint64_t seed);

/// Empirical distribution of the final score difference over n_paths paths,
/// each on its own substream of the master seed. Identical in Serial and
/// Parallel mode; identical to collecting terminal_diff() from
/// simulate_path(rates, start, substream_seed(seed, i)) for i in [0, n_paths).
ScoreDiffDist simulate_final_dist(const ScoringRates& rates, const GameState& start,
                                  std::uint64_t n_paths, std::uint64_t seed,
                                  ExecMode mode = ExecMode::Parallel);

} // namespace skellam
