#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace rcv {

struct Candidate {
    int id = -1;
    std::string name;

    bool operator==(const Candidate&) const = default;
};

/// Candidate ids in strictly decreasing preference. May be empty or list only
/// part of the roster; an omitted candidate ranks below every listed one and
/// expresses no preference among the other omitted candidates.
using Ranking = std::vector<int>;

struct BallotGroup {
    Ranking ranking;
    long long count = 0;

    bool operator==(const BallotGroup&) const = default;
};

/// Exact ballot-count ratio; kept unreduced so numerator and denominator stay
/// meaningful as raw tallies.
struct Rational {
    long long num = 0;
    long long den = 1;

    bool operator==(const Rational&) const = default;
};

/// Immutable weighted ballot profile: a candidate roster plus normalized
/// ballot groups (rankings pairwise distinct, kept in first-appearance
/// order). All tabulations treat it as read-only, so any number of threads
/// may analyze the same profile concurrently.
class BallotProfile {
public:
    /// Builds a profile from roster names and raw groups, merging duplicate
    /// rankings (counts summed) while preserving first-appearance order.
    /// Throws std::invalid_argument on malformed input (empty roster,
    /// duplicate or invalid names, out-of-range ids, non-positive counts).
    BallotProfile(std::vector<std::string> roster_names, std::vector<BallotGroup> groups);

    /// Parses ballot-file text (see docs/formats.md). Throws ParseError with
    /// the offending 1-based line number.
    static BallotProfile parse(std::string_view text);

    const std::vector<Candidate>& roster() const noexcept { return roster_; }
    const std::vector<BallotGroup>& groups() const noexcept { return groups_; }
    int candidate_count() const noexcept { return static_cast<int>(roster_.size()); }
    long long total_ballots() const noexcept { return total_; }

    const std::string& name_of(int id) const;
    std::optional<int> id_of(std::string_view name) const noexcept;

    /// Roster ids 0..n-1.
    std::vector<int> all_ids() const;
    std::vector<std::string> names() const;

    /// Removes every candidate not in `keep`. Survivor order inside each
    /// ranking is preserved, identical rankings merge, and ballots left with
    /// an empty ranking are retained as abstaining groups so the total is
    /// unchanged. Surviving candidates are re-indexed densely in original
    /// roster order. Throws std::invalid_argument if `keep` is empty or
    /// names an unknown id.
    BallotProfile restrict_to(const std::vector<int>& keep) const;

    /// Canonical ballot-file form: roster header plus one line per group.
    /// parse(serialize()) reproduces the profile exactly.
    std::string serialize() const;

    bool operator==(const BallotProfile&) const = default;

private:
    std::vector<Candidate> roster_;
    std::vector<BallotGroup> groups_;
    long long total_ = 0;
};

/// Fraction of the ballots ranking `candidate` first that also rank at least
/// one further candidate. Throws std::domain_error when `candidate` has no
/// first-preference ballots, std::invalid_argument when it is not in the
/// roster.
Rational continuation_rate(const BallotProfile& profile, int candidate);

/// Renders a rational as a percentage with two decimals, half-up ("79.02").
std::string percent_two_decimals(Rational r);

}  // namespace rcv
