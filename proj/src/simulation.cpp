#include "skellam/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "skellam/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skellam {

namespace {

// Enforces strictly increasing jump times after the merge. Exact ties have
// probability ~n * 2^-53; they are resolved by the smallest representable
// nudge, pushed back below 1 when the tie sits at the interval end.
void make_strictly_increasing(std::vector<double>& times) {
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (times[i] <= times[i - 1])
            times[i] = std::nextafter(times[i - 1], 2.0);
    }
    for (std::size_t i = times.size(); i-- > 1;) {
        if (times[i] > 1.0) times[i] = 1.0;
        if (times[i - 1] >= times[i]) times[i - 1] = std::nextafter(times[i], 0.0);
    }
}

} // namespace

ScorePath simulate_path(const ScoringRates& rates, const GameState& start, std::uint64_t seed) {
    rates.validate();
    start.validate();

    ScorePath path;
    path.start_time = start.t;
    path.start_diff = start.lead();

    const double remaining = 1.0 - start.t;
    Rng rng(seed);
    // Counts are drawn before any jump time, so consumers that only need the
    // terminal difference can stop after the two Poisson draws and still see
    // the exact counts a full path simulation would produce.
    const long n_a = rng.poisson(rates.lambda_a);
    const long n_b = rng.poisson(rates.lambda_b);

    std::vector<double> t_a(static_cast<std::size_t>(n_a));
    std::vector<double> t_b(static_cast<std::size_t>(n_b));
    for (double& t : t_a) t = start.t + remaining * rng.uniform();
    for (double& t : t_b) t = start.t + remaining * rng.uniform();
    std::sort(t_a.begin(), t_a.end());
    std::sort(t_b.begin(), t_b.end());

    path.jump_times.reserve(t_a.size() + t_b.size());
    path.jump_signs.reserve(t_a.size() + t_b.size());
    std::size_t ia = 0;
    std::size_t ib = 0;
    while (ia < t_a.size() || ib < t_b.size()) {
        const bool take_a =
            ib == t_b.size() || (ia < t_a.size() && t_a[ia] <= t_b[ib]);
        if (take_a) {
            path.jump_times.push_back(t_a[ia++]);
            path.jump_signs.push_back(+1);
        } else {
            path.jump_times.push_back(t_b[ib++]);
            path.jump_signs.push_back(-1);
        }
    }
    make_strictly_increasing(path.jump_times);
    return path;
}

ScoreDiffDist simulate_final_dist(const ScoringRates& rates, const GameState& start,
                                  std::uint64_t n_paths, std::uint64_t seed, ExecMode mode) {
    rates.validate();
    start.validate();
    if (n_paths < 1) throw std::domain_error("n_paths must be >= 1");

    const int lead = start.lead();
    std::map<int, std::uint64_t> histogram;

    // Terminal differences need only the per-path counts; the counts come
    // first in each substream, so this matches full path simulation exactly.
    const auto terminal = [&](std::uint64_t i) {
        Rng rng(substream_seed(seed, i));
        const long n_a = rng.poisson(rates.lambda_a);
        const long n_b = rng.poisson(rates.lambda_b);
        return lead + static_cast<int>(n_a - n_b);
    };

#ifdef _OPENMP
    if (mode == ExecMode::Parallel) {
        const int n_threads = omp_get_max_threads();
        std::vector<std::map<int, std::uint64_t>> local(static_cast<std::size_t>(n_threads));
#pragma omp parallel
        {
            auto& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
            for (std::uint64_t i = 0; i < n_paths; ++i) ++mine[terminal(i)];
        }
        // Integer counts merge exactly regardless of thread interleaving.
        for (const auto& m : local)
            for (const auto& [k, n] : m) histogram[k] += n;
    } else
#else
    (void)mode;
#endif
    {
        for (std::uint64_t i = 0; i < n_paths; ++i) ++histogram[terminal(i)];
    }

    const int k_min = histogram.begin()->first;
    const int k_max = histogram.rbegin()->first;
    std::vector<double> probs(static_cast<std::size_t>(k_max - k_min) + 1, 0.0);
    for (const auto& [k, n] : histogram)
        probs[static_cast<std::size_t>(k - k_min)] =
            static_cast<double>(n) / static_cast<double>(n_paths);
    return ScoreDiffDist{k_min, std::move(probs)};
}

} // namespace skellam
