// skellam-odds: calibrate a two-rate score-difference model to correct-score
// betting odds, and derive simulations and diagnostics from it.
//
// Subcommands write their results under --out DIR; the first line of every
// output embeds the exact command that reproduces it.

#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skellam/calibration.hpp"
#include "skellam/diagnostics.hpp"
#include "skellam/errors.hpp"
#include "skellam/io.hpp"
#include "skellam/rng.hpp"
#include "skellam/simulation.hpp"

namespace {

namespace fs = std::filesystem;
using namespace skellam;

// Range violations on command-line flags are usage errors (exit 2), unlike
// degeneracies that surface while computing (exit 3).
template <typename Fn>
void validate_flags(Fn&& fn) {
    try {
        fn();
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(e.what());
    }
}

std::string quote_if_needed(const std::string& arg) {
    if (arg.find_first_of(" \t\"'") == std::string::npos) return arg;
    std::string quoted = "'";
    for (char ch : arg) {
        if (ch == '\'')
            quoted += "'\\''";
        else
            quoted += ch;
    }
    quoted += "'";
    return quoted;
}

std::string join_command(const std::vector<std::string>& parts) {
    std::string cmd;
    for (const auto& p : parts) {
        if (!cmd.empty()) cmd += ' ';
        cmd += quote_if_needed(p);
    }
    return cmd;
}

InflationModel parse_inflation(const std::string& text) {
    if (text == "none") return InflationModel{InflationKind::None, 0.0};
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    if (colon == std::string::npos || (kind != "type1" && kind != "type2"))
        throw std::invalid_argument(
            "inflation must be none, type1:<p> or type2:<theta>, got \"" + text + "\"");
    const std::string value = text.substr(colon + 1);
    std::size_t used = 0;
    double factor = 0.0;
    try {
        factor = std::stod(value, &used);
    } catch (const std::exception&) {
        used = std::string::npos;
    }
    if (used != value.size() || value.empty())
        throw std::invalid_argument("invalid inflation factor \"" + value + "\"");
    InflationModel model{kind == "type1" ? InflationKind::TypeOne : InflationKind::TypeTwo,
                         factor};
    validate_flags([&] { model.validate(); });
    return model;
}

std::pair<int, int> parse_score(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("score must be A:B, got \"" + text + "\"");
    try {
        std::size_t ua = 0;
        std::size_t ub = 0;
        const int a = std::stoi(text.substr(0, colon), &ua);
        const int b = std::stoi(text.substr(colon + 1), &ub);
        if (ua != colon || ub != text.size() - colon - 1 || a < 0 || b < 0)
            throw std::invalid_argument("");
        return {a, b};
    } catch (const std::exception&) {
        throw std::invalid_argument("score must be A:B with nonnegative integers, got \"" +
                                    text + "\"");
    }
}

fs::path prepare_out_dir(const std::string& out) {
    fs::path dir(out);
    fs::create_directories(dir);
    return dir;
}

int run_calibrate(const std::string& odds_file, const std::optional<std::string>& score,
                  const std::optional<double>& t, const std::string& out) {
    std::vector<std::string> cmd{"skellam-odds", "calibrate", "--odds", odds_file};
    GameState state;
    if (score) {
        const auto [a, b] = parse_score(*score);
        state.score_a = a;
        state.score_b = b;
        cmd.insert(cmd.end(), {"--score", *score});
    }
    if (t) {
        state.t = *t;
        cmd.insert(cmd.end(), {"--t", format_double(*t)});
    }
    validate_flags([&] { state.validate(); });
    cmd.insert(cmd.end(), {"--out", out});
    const std::string command = join_command(cmd);

    const OddsMatrix matrix = read_odds_csv(odds_file, &std::cerr);
    const OddsMatrix sub = adjust_for_state(matrix, state);
    const MarketDist market = market_score_diff(sub);
    const CalibrationResult result = calibrate(market.dist, 0);
    const auto rows = compare(market.dist, result.rates);

    const fs::path dir = prepare_out_dir(out);
    write_calibration_json((dir / "calibration.json").string(), result, market.vig, command);
    write_comparison_csv((dir / "comparison.csv").string(), rows, command);
    return 0;
}

int run_timeline(const std::string& manifest_file, const std::string& out) {
    const std::string command =
        join_command({"skellam-odds", "timeline", "--manifest", manifest_file, "--out", out});

    const auto entries = read_manifest_csv(manifest_file);
    std::vector<std::pair<GameState, OddsMatrix>> snapshots;
    snapshots.reserve(entries.size());
    for (const auto& e : entries)
        snapshots.emplace_back(e.state, read_odds_csv(e.odds_path, &std::cerr));

    std::vector<TimelinePoint> points;
    try {
        points = calibrate_timeline(snapshots);
    } catch (const std::invalid_argument& err) {
        // Attach the manifest location to the offending snapshot index.
        throw std::invalid_argument(manifest_file + ": " + err.what());
    }

    const fs::path dir = prepare_out_dir(out);
    write_timeline_csv((dir / "timeline.csv").string(), points, command);
    return 0;
}

int run_simulate(double lambda_a, double lambda_b, int lead, const std::optional<double>& t,
                 std::uint64_t n_paths, std::uint64_t seed, const std::string& out) {
    std::vector<std::string> cmd{"skellam-odds", "simulate",
                                 "--lambda-a", format_double(lambda_a),
                                 "--lambda-b", format_double(lambda_b)};
    if (lead != 0) cmd.insert(cmd.end(), {"--lead", std::to_string(lead)});
    if (t) cmd.insert(cmd.end(), {"--t", format_double(*t)});
    cmd.insert(cmd.end(), {"--n-paths", std::to_string(n_paths), "--seed", std::to_string(seed),
                           "--out", out});
    const std::string command = join_command(cmd);

    const ScoringRates rates{lambda_a, lambda_b};
    GameState start{t.value_or(0.0), lead > 0 ? lead : 0, lead < 0 ? -lead : 0};
    validate_flags([&] {
        rates.validate();
        start.validate();
    });
    if (n_paths < 1) throw std::invalid_argument("--n-paths must be >= 1");

    std::vector<ScorePath> paths;
    paths.reserve(n_paths);
    for (std::uint64_t i = 0; i < n_paths; ++i)
        paths.push_back(simulate_path(rates, start, substream_seed(seed, i)));

    const fs::path dir = prepare_out_dir(out);
    write_paths_csv((dir / "paths.csv").string(), paths, command);
    return 0;
}

int run_diagnose(const std::optional<std::string>& pairs_file,
                 const std::optional<std::string>& games_file, const std::string& out) {
    std::vector<std::string> cmd{"skellam-odds", "diagnose"};
    if (pairs_file) cmd.insert(cmd.end(), {"--pairs", *pairs_file});
    if (games_file) cmd.insert(cmd.end(), {"--games", *games_file});
    cmd.insert(cmd.end(), {"--out", out});
    const std::string command = join_command(cmd);

    const fs::path dir = prepare_out_dir(out);
    if (pairs_file) {
        const auto pairs = read_pairs_csv(*pairs_file);
        QqResult qq;
        try {
            qq = qq_log_odds(pairs);
        } catch (const std::domain_error& err) {
            throw parse_error(*pairs_file, 0, err.what());
        }
        write_qq_csv((dir / "qq.csv").string(), qq, command);
    }
    if (games_file) {
        const auto games = read_games_csv(*games_file);
        write_bucket_csv((dir / "bucket.csv").string(), bucket_calibration(games), command);
    }
    return 0;
}

int run_curve(double product, const std::string& inflation_text, const std::string& out) {
    std::vector<std::string> cmd{"skellam-odds", "curve", "--product", format_double(product)};
    if (inflation_text != "none") cmd.insert(cmd.end(), {"--inflation", inflation_text});
    cmd.insert(cmd.end(), {"--out", out});
    const std::string command = join_command(cmd);

    if (!(product > 0.0 && std::isfinite(product)))
        throw std::invalid_argument("--product must be positive and finite");
    const InflationModel inflation = parse_inflation(inflation_text);
    const auto curve = win_draw_curve(product, inflation);

    const fs::path dir = prepare_out_dir(out);
    write_curve_csv((dir / "curve.csv").string(), curve, command);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Score-difference model calibration for correct-score betting odds"};
    app.require_subcommand(1);

    // calibrate
    auto* calibrate_cmd = app.add_subcommand("calibrate", "Fit rates to one odds snapshot");
    std::string odds_file;
    std::optional<std::string> score;
    std::optional<double> t_opt;
    std::string out_dir;
    calibrate_cmd->add_option("--odds", odds_file, "Odds snapshot CSV")->required();
    calibrate_cmd->add_option("--score", score, "Current score A:B (default 0:0)");
    calibrate_cmd->add_option("--t", t_opt, "Game clock fraction in [0,1] (default 0)");
    calibrate_cmd->add_option("--out", out_dir, "Output directory")->required();

    // timeline
    auto* timeline_cmd = app.add_subcommand("timeline", "Calibrate a manifest of snapshots");
    std::string manifest_file;
    std::string timeline_out;
    timeline_cmd->add_option("--manifest", manifest_file, "Manifest CSV")->required();
    timeline_cmd->add_option("--out", timeline_out, "Output directory")->required();

    // simulate
    auto* simulate_cmd = app.add_subcommand("simulate", "Sample score-difference paths");
    double lambda_a = 0.0;
    double lambda_b = 0.0;
    int lead = 0;
    std::optional<double> sim_t;
    std::uint64_t n_paths = 0;
    std::uint64_t seed = 0;
    std::string sim_out;
    simulate_cmd->add_option("--lambda-a", lambda_a, "Home rate for the remaining game")->required();
    simulate_cmd->add_option("--lambda-b", lambda_b, "Away rate for the remaining game")->required();
    simulate_cmd->add_option("--lead", lead, "Current score difference (default 0)");
    simulate_cmd->add_option("--t", sim_t, "Game clock fraction in [0,1] (default 0)");
    simulate_cmd->add_option("--n-paths", n_paths, "Number of paths")->required();
    simulate_cmd->add_option("--seed", seed, "Master seed (64-bit)")->required();
    simulate_cmd->add_option("--out", sim_out, "Output directory")->required();

    // diagnose
    auto* diagnose_cmd = app.add_subcommand("diagnose", "Q-Q and bucket calibration reports");
    std::optional<std::string> pairs_file;
    std::optional<std::string> games_file;
    std::string diag_out;
    diagnose_cmd->add_option("--pairs", pairs_file, "market_prob,model_prob CSV");
    diagnose_cmd->add_option("--games", games_file, "implied_win_prob,home_won CSV");
    diagnose_cmd->add_option("--out", diag_out, "Output directory")->required();

    // curve
    auto* curve_cmd = app.add_subcommand("curve", "Win/draw curve at a fixed rate product");
    double product = 0.0;
    std::string inflation_text = "none";
    std::string curve_out;
    curve_cmd->add_option("--product", product, "Fixed product of the two rates")->required();
    curve_cmd->add_option("--inflation", inflation_text,
                          "none, type1:<p> or type2:<theta> (default none)");
    curve_cmd->add_option("--out", curve_out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (calibrate_cmd->parsed()) return run_calibrate(odds_file, score, t_opt, out_dir);
        if (timeline_cmd->parsed()) return run_timeline(manifest_file, timeline_out);
        if (simulate_cmd->parsed())
            return run_simulate(lambda_a, lambda_b, lead, sim_t, n_paths, seed, sim_out);
        if (diagnose_cmd->parsed()) {
            if (!pairs_file && !games_file) {
                std::cerr << "diagnose: pass --pairs and/or --games\n";
                return 2;
            }
            return run_diagnose(pairs_file, games_file, diag_out);
        }
        if (curve_cmd->parsed()) return run_curve(product, inflation_text, curve_out);
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const degenerate_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
