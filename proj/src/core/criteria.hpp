#pragma once

#include <optional>
#include <vector>

#include "tabulate.hpp"

namespace rcv {

enum class Criterion { CoreSupport, BroadSupport };
enum class Verdict { Pass, Fail, Tie };

/// Pair-election counts for candidates (x, y) with x proposed above y.
/// When core_restricted, only ballots whose highest-ranked major candidate
/// relative to `frame` (== y) is x or y contribute votes; ballots preferring
/// another major candidate, or listing none, fall into abstain. Otherwise
/// the tally is the full-ballot pairwise count.
struct PairTally {
    int x = -1;
    int y = -1;
    long long x_votes = 0;
    long long y_votes = 0;
    long long abstain = 0;
    bool core_restricted = false;
    int frame = -1;

    bool operator==(const PairTally&) const = default;
};

struct PairVerdict {
    PairTally tally;
    Verdict verdict = Verdict::Fail;

    bool operator==(const PairVerdict&) const = default;
};

/// Pair-by-pair audit of a proposed social ranking. One entry per unordered
/// roster pair, in ranking order: (r[i], r[j]) for i < j. Overall pass
/// requires a strict majority in every pair; a single tie or reversal fails
/// the ranking.
struct CriterionReport {
    Criterion criterion = Criterion::CoreSupport;
    SocialRanking ranking;
    std::vector<PairVerdict> pairs;
    bool overall_pass = false;

    bool operator==(const CriterionReport&) const = default;
};

/// {y} plus every candidate ranked above y; ascending ids.
std::vector<int> major_set(const SocialRanking& ranking, int y);

/// Core-support pair election for x vs y under `ranking` (x must be strictly
/// above y). A ballot votes for whichever of x, y is its highest-ranked
/// major candidate relative to y, skipping minor candidates entirely;
/// ballots whose highest-ranked major candidate is someone else, or that
/// list no major candidate, abstain.
PairTally core_support_tally(const BallotProfile& profile, const SocialRanking& ranking, int x,
                             int y);

CriterionReport check_core_support(const BallotProfile& profile, const SocialRanking& ranking);
CriterionReport check_broad_support(const BallotProfile& profile, const SocialRanking& ranking);

enum class MoveDirection { Promote, Demote };

/// One group's share of a ballot manipulation: `moved` ballots rewritten
/// from `group_ranking` to `transformed_ranking`.
struct BallotMove {
    int group_index = -1;
    Ranking group_ranking;
    long long group_count = 0;
    long long moved = 0;
    Ranking transformed_ranking;

    bool operator==(const BallotMove&) const = default;
};

/// Concrete ballot manipulation that changes an IRV outcome: applying the
/// moves and re-running IRV elects `new_winner`. Promote witnesses raise the
/// sitting winner and watch it lose; demote witnesses lower a loser and
/// watch it win. The default search produces exactly one move; the
/// exhaustive search may spread `total_moved` across several groups.
struct MonotonicityWitness {
    MoveDirection direction = MoveDirection::Promote;
    int candidate = -1;  // the moved candidate
    std::vector<BallotMove> moves;
    long long total_moved = 0;
    int original_winner = -1;
    int new_winner = -1;
    std::vector<RoundLog> original_rounds;
    std::vector<RoundLog> new_rounds;

    bool operator==(const MonotonicityWitness&) const = default;
};

struct MonotonicityOptions {
    bool promote = true;
    bool demote = false;
    /// Search combined moves across several groups at once. Guarded to small
    /// profiles: at most 8 eligible groups and 24 movable ballots per
    /// direction and candidate.
    bool exhaustive = false;

    bool operator==(const MonotonicityOptions&) const = default;
};

/// Moves `candidate` to first place; other listed candidates shift down in
/// order, unlisted candidates stay unlisted.
Ranking promote_to_first(const Ranking& ranking, int candidate);

/// Moves `candidate` (which must be listed) to the last listed position.
Ranking demote_to_last(const Ranking& ranking, int candidate);

/// Rewrites `moved` ballots of group `group_index` to `transformed`;
/// the result is re-normalized.
BallotProfile apply_move(const BallotProfile& profile, int group_index, long long moved,
                         const Ranking& transformed);

/// Applies every move against the original group indexing simultaneously.
/// Exposed so witnesses can be replayed.
BallotProfile apply_moves(const BallotProfile& profile, const std::vector<BallotMove>& moves);

/// Search for the minimal manipulation that flips the IRV outcome, by total
/// moved-ballot count. Promote direction: raise the winner to first on k
/// ballots (k = 1..count, groups in file order) and report the first
/// manipulation after which the winner loses. Demote direction: lower a
/// losing candidate to last-listed and report the first after which it wins.
/// The default searches one group at a time; options.exhaustive additionally
/// enumerates combined moves across groups, smallest totals first.
/// Witnesses are ordered by (total k, promote-before-demote, candidate id,
/// enumeration order); re-runs that end in a tie error are skipped. Returns
/// nothing when no manipulation flips the outcome. Tie errors from the
/// initial tabulation propagate.
std::optional<MonotonicityWitness> find_monotonicity_violation(
    const BallotProfile& profile, TiebreakPolicy policy = TiebreakPolicy::ErrorOnTie,
    MonotonicityOptions options = {});

/// A pair whose relative IRV order differs with and without the removed
/// candidate. Votes are the pair-election counts after removal.
struct PairFlip {
    int above_before = -1;  // above in the original ranking, below afterwards
    int below_before = -1;
    long long above_votes = 0;
    long long below_votes = 0;
    long long abstain = 0;

    bool operator==(const PairFlip&) const = default;
};

struct IiaReport {
    int removed = -1;
    SocialRanking before;      // original roster ids
    std::vector<int> after;    // original roster ids, removed candidate absent
    std::vector<PairFlip> flips;

    bool operator==(const IiaReport&) const = default;
};

/// Re-runs IRV without `removed` and reports every surviving pair whose
/// relative order flips. Requires at least three candidates.
IiaReport iia_flip_report(const BallotProfile& profile, int removed,
                          TiebreakPolicy policy = TiebreakPolicy::ErrorOnTie);

}  // namespace rcv
