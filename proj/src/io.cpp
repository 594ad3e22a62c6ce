#include "skellam/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "skellam/errors.hpp"

namespace skellam {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& raw, const std::string& path, long line,
                    const std::string& what) {
    const std::string s = trim(raw);
    long long value = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw parse_error(path, line, "expected an integer for " + what + ", got \"" + raw + "\"");
    return value;
}

double parse_real(const std::string& raw, const std::string& path, long line,
                  const std::string& what) {
    const std::string s = trim(raw);
    if (s.empty()) throw parse_error(path, line, "expected a number for " + what);
    char* end = nullptr;
    const double value = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(value))
        throw parse_error(path, line, "expected a number for " + what + ", got \"" + raw + "\"");
    return value;
}

struct CsvReader {
    std::string path;
    std::ifstream in;
    long line_no = 0;

    explicit CsvReader(const std::string& p, const char* expected_header) : path(p), in(p) {
        if (!in) throw parse_error(path, 0, "cannot open file");
        std::string header;
        if (!std::getline(in, header)) throw parse_error(path, 1, "missing header");
        ++line_no;
        std::string cleaned;
        for (char ch : header)
            if (ch != '\r' && ch != ' ') cleaned += ch;
        if (cleaned != expected_header)
            throw parse_error(path, 1, std::string("expected header \"") + expected_header +
                                           "\", got \"" + trim(header) + "\"");
    }

    // Returns false at end of input; skips blank lines.
    bool next(std::vector<std::string>& fields, std::size_t expected) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (trim(line).empty()) continue;
            fields = split_fields(line);
            if (fields.size() != expected)
                throw parse_error(path, line_no,
                                  "expected " + std::to_string(expected) + " fields, got " +
                                      std::to_string(fields.size()));
            return true;
        }
        return false;
    }
};

} // namespace

OddsMatrix read_odds_csv(const std::string& path, std::ostream* warnings) {
    CsvReader reader(path, "home_goals,away_goals,numerator,denominator");
    OddsMatrix matrix;
    std::vector<std::string> f;
    while (reader.next(f, 4)) {
        const long long home = parse_int(f[0], path, reader.line_no, "home_goals");
        const long long away = parse_int(f[1], path, reader.line_no, "away_goals");
        const long long num = parse_int(f[2], path, reader.line_no, "numerator");
        long long den = parse_int(f[3], path, reader.line_no, "denominator");
        if (home < 0 || away < 0)
            throw parse_error(path, reader.line_no, "goals must be >= 0");
        if (num < 0) throw parse_error(path, reader.line_no, "numerator must be >= 0");
        if (den < 0) throw parse_error(path, reader.line_no, "denominator must be >= 0");
        if (den == 0) {
            // A zero denominator is never a valid quote; the evident intent of
            // quotes like 50/0 is 50/1.
            den = 1;
            if (warnings)
                *warnings << path << ":" << reader.line_no << ": denominator 0 corrected to 1 for odds "
                          << num << "/0\n";
        }
        const auto key = std::make_pair(static_cast<int>(home), static_cast<int>(away));
        if (!matrix.entries.emplace(key, FractionalOdds{num, den}).second)
            throw parse_error(path, reader.line_no,
                              "duplicate score " + std::to_string(home) + "-" + std::to_string(away));
    }
    if (matrix.entries.empty()) throw parse_error(path, reader.line_no, "no odds rows");
    return matrix;
}

std::vector<ManifestEntry> read_manifest_csv(const std::string& path) {
    CsvReader reader(path, "t,score_a,score_b,odds_file");
    const std::filesystem::path base = std::filesystem::path(path).parent_path();
    std::vector<ManifestEntry> entries;
    std::vector<std::string> f;
    while (reader.next(f, 4)) {
        ManifestEntry e;
        e.state.t = parse_real(f[0], path, reader.line_no, "t");
        e.state.score_a = static_cast<int>(parse_int(f[1], path, reader.line_no, "score_a"));
        e.state.score_b = static_cast<int>(parse_int(f[2], path, reader.line_no, "score_b"));
        const std::string file = trim(f[3]);
        if (file.empty()) throw parse_error(path, reader.line_no, "empty odds_file");
        e.odds_path = (base / file).string();
        e.line = reader.line_no;
        try {
            e.state.validate();
        } catch (const std::domain_error& err) {
            throw parse_error(path, reader.line_no, err.what());
        }
        entries.push_back(std::move(e));
    }
    if (entries.empty()) throw parse_error(path, reader.line_no, "no snapshots");
    return entries;
}

std::vector<std::pair<double, double>> read_pairs_csv(const std::string& path) {
    CsvReader reader(path, "market_prob,model_prob");
    std::vector<std::pair<double, double>> pairs;
    std::vector<std::string> f;
    while (reader.next(f, 2)) {
        const double market = parse_real(f[0], path, reader.line_no, "market_prob");
        const double model = parse_real(f[1], path, reader.line_no, "model_prob");
        if (market < 0.0 || market > 1.0 || model < 0.0 || model > 1.0)
            throw parse_error(path, reader.line_no, "probabilities must lie in [0, 1]");
        pairs.emplace_back(market, model);
    }
    if (pairs.empty()) throw parse_error(path, reader.line_no, "no probability pairs");
    return pairs;
}

std::vector<std::pair<double, bool>> read_games_csv(const std::string& path) {
    CsvReader reader(path, "implied_win_prob,home_won");
    std::vector<std::pair<double, bool>> games;
    std::vector<std::string> f;
    while (reader.next(f, 2)) {
        const double p = parse_real(f[0], path, reader.line_no, "implied_win_prob");
        const long long won = parse_int(f[1], path, reader.line_no, "home_won");
        if (p < 0.0 || p > 1.0)
            throw parse_error(path, reader.line_no, "implied_win_prob must lie in [0, 1]");
        if (won != 0 && won != 1)
            throw parse_error(path, reader.line_no, "home_won must be 0 or 1");
        games.emplace_back(p, won == 1);
    }
    if (games.empty()) throw parse_error(path, reader.line_no, "no games");
    return games;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary); // fixed \n endings on every platform
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

} // namespace

void write_calibration_json(const std::string& path, const CalibrationResult& result,
                            double vig, const std::string& command) {
    auto out = open_out(path);
    out << "{\n"
        << "  \"command\": \"" << json_escape(command) << "\",\n"
        << "  \"lambda_a\": " << format_double(result.rates.lambda_a) << ",\n"
        << "  \"lambda_b\": " << format_double(result.rates.lambda_b) << ",\n"
        << "  \"residuals\": {\n"
        << "    \"mean\": " << format_double(result.residual_mean) << ",\n"
        << "    \"var\": " << format_double(result.residual_var) << "\n"
        << "  },\n"
        << "  \"objective\": " << format_double(result.objective) << ",\n"
        << "  \"implied_vol\": " << format_double(result.implied_vol) << ",\n"
        << "  \"vig\": " << format_double(vig) << "\n"
        << "}\n";
}

void write_comparison_csv(const std::string& path, const std::vector<ComparisonRow>& rows,
                          const std::string& command) {
    auto out = open_out(path);
    out << "# " << command << "\n";
    out << "diff,market,model\n";
    for (const auto& row : rows)
        out << row.score_diff << "," << format_double(row.market_prob) << ","
            << format_double(row.model_prob) << "\n";
}

void write_timeline_csv(const std::string& path, const std::vector<TimelinePoint>& points,
                        const std::string& command) {
    auto out = open_out(path);
    out << "# " << command << "\n";
    out << "t,lambda_a,lambda_b,iv,lambda_a_per_rem,lambda_b_per_rem,p_win,p_draw,p_lose\n";
    for (const auto& p : points) {
        const ScoringRates& rates = p.result.rates;
        const int lead = p.state.lead();
        out << format_double(p.t) << "," << format_double(rates.lambda_a) << ","
            << format_double(rates.lambda_b) << "," << format_double(p.result.implied_vol) << ",";
        if (p.per_rem_defined)
            out << format_double(p.per_rem_a) << "," << format_double(p.per_rem_b);
        else
            out << ","; // rates per remaining time are undefined at t = 1
        out << "," << format_double(prob_win(rates, lead)) << ","
            << format_double(prob_draw(rates, lead)) << ","
            << format_double(prob_lose(rates, lead)) << "\n";
    }
}

void write_paths_csv(const std::string& path, const std::vector<ScorePath>& paths,
                     const std::string& command) {
    auto out = open_out(path);
    out << "# " << command << "\n";
    out << "path_id,time,diff\n";
    for (std::size_t id = 0; id < paths.size(); ++id) {
        const ScorePath& p = paths[id];
        out << id << "," << format_double(p.start_time) << "," << p.start_diff << "\n";
        int diff = p.start_diff;
        for (std::size_t j = 0; j < p.jump_times.size(); ++j) {
            diff += p.jump_signs[j];
            out << id << "," << format_double(p.jump_times[j]) << "," << diff << "\n";
        }
    }
}

void write_qq_csv(const std::string& path, const QqResult& qq, const std::string& command) {
    auto out = open_out(path);
    out << "# " << command << "\n";
    out << "# excluded_pairs: " << qq.excluded << "\n";
    out << "mq,sq\n";
    for (const auto& [mq, sq] : qq.points)
        out << format_double(mq) << "," << format_double(sq) << "\n";
}

void write_curve_csv(const std::string& path,
                     const std::vector<std::pair<double, double>>& curve,
                     const std::string& command) {
    auto out = open_out(path);
    out << "# " << command << "\n";
    out << "win,draw\n";
    for (const auto& [win, draw] : curve)
        out << format_double(win) << "," << format_double(draw) << "\n";
}

void write_bucket_csv(const std::string& path, const BucketReport& report,
                      const std::string& command) {
    auto out = open_out(path);
    out << "# " << command << "\n";
    out << "# overflow_count: " << report.overflow_count << "\n";
    out << "bucket_lo,bucket_hi,count,freq\n";
    for (std::size_t i = 0; i + 1 < report.edges.size(); ++i) {
        out << format_double(report.edges[i]) << "," << format_double(report.edges[i + 1]) << ","
            << report.counts[i] << ",";
        if (report.counts[i] > 0) out << format_double(report.freqs[i]);
        out << "\n";
    }
}

} // namespace skellam
