#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "profile.hpp"

namespace rcv {

/// How tabulations resolve equal tallies. ErrorOnTie raises TieError;
/// LowestIdEliminated deterministically drops the lowest candidate id (and,
/// for plurality, ranks it below equally-counted rivals). A two-way tie in
/// the final IRV round is always an error: no rule can say which of the two
/// belongs on top.
enum class TiebreakPolicy { ErrorOnTie, LowestIdEliminated };

/// Strict total order over the full roster, winner first.
using SocialRanking = std::vector<int>;

/// First-preference tallies over an active candidate set.
struct TallySet {
    std::vector<int> active;        // ascending ids
    std::vector<long long> votes;   // parallel to active
    long long exhausted = 0;        // ballots listing no active candidate

    long long votes_for(int id) const;

    bool operator==(const TallySet&) const = default;
};

/// Audit record for one IRV elimination round.
struct RoundLog {
    int round = 0;  // 1-based
    TallySet tallies;
    int eliminated = -1;
    bool tiebreak_applied = false;

    bool operator==(const RoundLog&) const = default;
};

struct IrvResult {
    SocialRanking ranking;
    std::vector<RoundLog> rounds;

    int winner() const { return ranking.front(); }

    bool operator==(const IrvResult&) const = default;
};

/// Full-ballot pair-election counts: beats(x, y) is the number of ballots
/// ranking x above y (a listed candidate outranks every unlisted one);
/// abstain(x, y) counts ballots listing neither. For every pair,
/// beats(x, y) + beats(y, x) + abstain(x, y) == total_ballots().
class PairwiseMatrix {
public:
    PairwiseMatrix() = default;
    PairwiseMatrix(int candidates, long long total);

    int candidate_count() const noexcept { return n_; }
    long long total_ballots() const noexcept { return total_; }
    long long beats(int x, int y) const { return beats_[index(x, y)]; }
    long long abstain(int x, int y) const { return abstain_[index(x, y)]; }

    void add_beats(int x, int y, long long count) { beats_[index(x, y)] += count; }
    void add_abstain(int x, int y, long long count) {
        abstain_[index(x, y)] += count;
        abstain_[index(y, x)] += count;
    }

    bool operator==(const PairwiseMatrix&) const = default;

private:
    size_t index(int x, int y) const;

    int n_ = 0;
    long long total_ = 0;
    std::vector<long long> beats_;
    std::vector<long long> abstain_;
};

struct CycleReport {
    std::vector<int> smith_set;                  // ascending ids
    std::vector<std::pair<int, int>> tied_pairs; // (x, y) with x < y

    bool operator==(const CycleReport&) const = default;
};

/// Either the transitive pairwise-majority order, or a cycle diagnosis.
struct CondorcetOutcome {
    std::optional<SocialRanking> ranking;
    std::optional<CycleReport> cycle;

    bool has_ranking() const { return ranking.has_value(); }

    bool operator==(const CondorcetOutcome&) const = default;
};

/// Counts each ballot for its highest-ranked candidate in `active`; ballots
/// listing none are exhausted.
TallySet first_preferences(const BallotProfile& profile, const std::vector<int>& active);

/// Candidates ordered by first-preference count, descending.
SocialRanking plurality_ranking(const BallotProfile& profile,
                                TiebreakPolicy policy = TiebreakPolicy::ErrorOnTie);

/// Repeatedly eliminates the candidate with the fewest current first
/// preferences, filling the social ranking from the bottom up. The round
/// logs record every tally, the eliminated candidate, and whether a
/// tie-break was applied.
IrvResult irv_ranking(const BallotProfile& profile,
                      TiebreakPolicy policy = TiebreakPolicy::ErrorOnTie);

PairwiseMatrix pairwise_matrix(const BallotProfile& profile);

/// A ranking exists iff the strict pairwise-majority relation is a
/// transitive tournament; otherwise the outcome carries a CycleReport.
/// A cycle is a value, never an error.
CondorcetOutcome condorcet_outcome(const PairwiseMatrix& matrix);

/// Minimal nonempty set whose members all strictly beat every outsider;
/// {Condorcet winner} when one exists.
std::vector<int> smith_set(const PairwiseMatrix& matrix);

}  // namespace rcv
