#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rcv {

/// Ballot-file parse failure. `line` is 1-based; 0 when the failure is not
/// tied to a specific line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_ = 0;
};

/// A tally tie that the active tie-break policy refuses to break.
class TieError : public std::runtime_error {
public:
    TieError(std::vector<int> tied, int round, const std::string& message)
        : std::runtime_error(message), tied_(std::move(tied)), round_(round) {}

    /// Candidate ids sharing the tied tally, ascending.
    const std::vector<int>& tied() const noexcept { return tied_; }

    /// 1-based elimination round; 0 for single-round methods.
    int round() const noexcept { return round_; }

private:
    std::vector<int> tied_;
    int round_ = 0;
};

}  // namespace rcv
