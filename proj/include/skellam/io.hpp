#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "skellam/calibration.hpp"
#include "skellam/diagnostics.hpp"
#include "skellam/odds.hpp"
#include "skellam/simulation.hpp"

namespace skellam {

/// Shortest decimal string that round-trips the value exactly.
std::string format_double(double v);

/// Reads an odds snapshot CSV with header
/// home_goals,away_goals,numerator,denominator. A zero denominator is
/// corrected to 1 with a note to `warnings` (when non-null); structural
/// problems raise parse_error carrying path:line.
OddsMatrix read_odds_csv(const std::string& path, std::ostream* warnings = nullptr);

struct ManifestEntry {
    GameState state;
    std::string odds_path; // resolved relative to the manifest location
    long line = 0;         // manifest line the entry came from
};

/// Reads a timeline manifest CSV with header t,score_a,score_b,odds_file.
std::vector<ManifestEntry> read_manifest_csv(const std::string& path);

/// Reads a probability-pair CSV with header market_prob,model_prob.
std::vector<std::pair<double, double>> read_pairs_csv(const std::string& path);

/// Reads a game-outcome CSV with header implied_win_prob,home_won
/// (home_won is 0 or 1).
std::vector<std::pair<double, bool>> read_games_csv(const std::string& path);

/// Writers. Every file starts with the exact command that reproduces it,
/// as a "# " comment line for CSV and a "command" field for JSON.
void write_calibration_json(const std::string& path, const CalibrationResult& result,
                            double vig, const std::string& command);
void write_comparison_csv(const std::string& path, const std::vector<ComparisonRow>& rows,
                          const std::string& command);
void write_timeline_csv(const std::string& path, const std::vector<TimelinePoint>& points,
                        const std::string& command);
void write_paths_csv(const std::string& path, const std::vector<ScorePath>& paths,
                     const std::string& command);
void write_qq_csv(const std::string& path, const QqResult& qq, const std::string& command);
void write_curve_csv(const std::string& path,
                     const std::vector<std::pair<double, double>>& curve,
                     const std::string& command);
void write_bucket_csv(const std::string& path, const BucketReport& report,
                      const std::string& command);

} // namespace skellam
