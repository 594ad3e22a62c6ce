#pragma once

#include <stdexcept>
#include <string>

namespace skellam {

/// Input file failed to parse or validate. Message carries "path:line: detail".
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& path, long line, const std::string& detail)
        : std::invalid_argument(path + ":" + std::to_string(line) + ": " + detail),
          path_(path), line_(line) {}

    const std::string& path() const { return path_; }
    long line() const { return line_; }

private:
    std::string path_;
    long line_;
};

/// Structurally valid input that has no usable information content
/// (e.g. a sub-game with no quotable outcomes, or a pure point mass
/// where a proper distribution is required).
class degenerate_error : public std::runtime_error {
public:
    explicit degenerate_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace skellam
