#include "criteria.hpp"

#include <algorithm>
#include <tuple>

namespace rcv {

namespace {

std::vector<int> ranking_positions(const BallotProfile& profile, const SocialRanking& ranking) {
    const int n = profile.candidate_count();
    if (static_cast<int>(ranking.size()) != n)
        throw std::invalid_argument("ranking must be a permutation of the roster");
    std::vector<int> pos(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < ranking.size(); ++i) {
        int id = ranking[i];
        if (id < 0 || id >= n || pos[static_cast<size_t>(id)] != -1)
            throw std::invalid_argument("ranking must be a permutation of the roster");
        pos[static_cast<size_t>(id)] = static_cast<int>(i);
    }
    return pos;
}

Verdict verdict_of(long long x_votes, long long y_votes) {
    if (x_votes > y_votes) return Verdict::Pass;
    if (x_votes == y_votes) return Verdict::Tie;
    return Verdict::Fail;
}

CriterionReport build_report(Criterion criterion, const BallotProfile& profile,
                             const SocialRanking& ranking) {
    CriterionReport report;
    report.criterion = criterion;
    report.ranking = ranking;

    if (criterion == Criterion::BroadSupport) {
        PairwiseMatrix m = pairwise_matrix(profile);
        for (size_t i = 0; i < ranking.size(); ++i) {
            for (size_t j = i + 1; j < ranking.size(); ++j) {
                int x = ranking[i];
                int y = ranking[j];
                PairTally t{x, y, m.beats(x, y), m.beats(y, x), m.abstain(x, y), false, -1};
                report.pairs.push_back(PairVerdict{t, verdict_of(t.x_votes, t.y_votes)});
            }
        }
    } else {
        for (size_t i = 0; i < ranking.size(); ++i)
            for (size_t j = i + 1; j < ranking.size(); ++j)
                report.pairs.push_back(PairVerdict{
                    core_support_tally(profile, ranking, ranking[i], ranking[j]),
                    Verdict::Fail});
        for (auto& pv : report.pairs)
            pv.verdict = verdict_of(pv.tally.x_votes, pv.tally.y_votes);
    }

    report.overall_pass = std::all_of(report.pairs.begin(), report.pairs.end(),
                                      [](const PairVerdict& p) { return p.verdict == Verdict::Pass; });
    return report;
}

}  // namespace

std::vector<int> major_set(const SocialRanking& ranking, int y) {
    auto it = std::find(ranking.begin(), ranking.end(), y);
    if (it == ranking.end()) throw std::invalid_argument("candidate not in ranking");
    std::vector<int> majors(ranking.begin(), it + 1);
    std::sort(majors.begin(), majors.end());
    return majors;
}

PairTally core_support_tally(const BallotProfile& profile, const SocialRanking& ranking, int x,
                             int y) {
    std::vector<int> pos = ranking_positions(profile, ranking);
    if (x < 0 || x >= profile.candidate_count() || y < 0 || y >= profile.candidate_count())
        throw std::invalid_argument("candidate id out of range");
    if (x == y || pos[static_cast<size_t>(x)] >= pos[static_cast<size_t>(y)])
        throw std::invalid_argument("x must rank strictly above y");

    const int frame_pos = pos[static_cast<size_t>(y)];
    PairTally tally{x, y, 0, 0, 0, true, y};
    for (const auto& g : profile.groups()) {
        int top_major = -1;
        for (int id : g.ranking) {
            if (pos[static_cast<size_t>(id)] <= frame_pos) {  // major relative to y
                top_major = id;
                break;
            }
        }
        if (top_major == x)
            tally.x_votes += g.count;
        else if (top_major == y)
            tally.y_votes += g.count;
    }
    tally.abstain = profile.total_ballots() - tally.x_votes - tally.y_votes;
    return tally;
}

CriterionReport check_core_support(const BallotProfile& profile, const SocialRanking& ranking) {
    ranking_positions(profile, ranking);
    return build_report(Criterion::CoreSupport, profile, ranking);
}

CriterionReport check_broad_support(const BallotProfile& profile, const SocialRanking& ranking) {
    ranking_positions(profile, ranking);
    return build_report(Criterion::BroadSupport, profile, ranking);
}

Ranking promote_to_first(const Ranking& ranking, int candidate) {
    Ranking out{candidate};
    for (int id : ranking)
        if (id != candidate) out.push_back(id);
    return out;
}

Ranking demote_to_last(const Ranking& ranking, int candidate) {
    if (std::find(ranking.begin(), ranking.end(), candidate) == ranking.end())
        throw std::invalid_argument("candidate not listed on this ballot");
    Ranking out;
    for (int id : ranking)
        if (id != candidate) out.push_back(id);
    out.push_back(candidate);
    return out;
}

BallotProfile apply_moves(const BallotProfile& profile, const std::vector<BallotMove>& moves) {
    const auto& groups = profile.groups();
    std::vector<long long> remaining(groups.size());
    for (size_t i = 0; i < groups.size(); ++i) remaining[i] = groups[i].count;

    for (const auto& move : moves) {
        if (move.group_index < 0 || move.group_index >= static_cast<int>(groups.size()))
            throw std::invalid_argument("group index out of range");
        if (move.moved < 1 || move.moved > remaining[static_cast<size_t>(move.group_index)])
            throw std::invalid_argument("moved count out of range");
        remaining[static_cast<size_t>(move.group_index)] -= move.moved;
    }

    std::vector<BallotGroup> new_groups;
    new_groups.reserve(groups.size() + moves.size());
    for (size_t i = 0; i < groups.size(); ++i)
        if (remaining[i] > 0) new_groups.push_back(BallotGroup{groups[i].ranking, remaining[i]});
    for (const auto& move : moves)
        new_groups.push_back(BallotGroup{move.transformed_ranking, move.moved});
    return BallotProfile(profile.names(), std::move(new_groups));
}

BallotProfile apply_move(const BallotProfile& profile, int group_index, long long moved,
                         const Ranking& transformed) {
    const auto& groups = profile.groups();
    if (group_index < 0 || group_index >= static_cast<int>(groups.size()))
        throw std::invalid_argument("group index out of range");
    const auto& g = groups[static_cast<size_t>(group_index)];
    return apply_moves(profile,
                       {BallotMove{group_index, g.ranking, g.count, moved, transformed}});
}

namespace {

// Groups a single search direction may draw from, with their transforms.
struct EligibleGroup {
    int group_index;
    Ranking original;
    long long count;
    Ranking transformed;
};

constexpr int kExhaustiveMaxGroups = 8;
constexpr long long kExhaustiveMaxBallots = 24;

class WitnessSearch {
public:
    WitnessSearch(const BallotProfile& profile, TiebreakPolicy policy, bool exhaustive)
        : profile_(profile),
          policy_(policy),
          exhaustive_(exhaustive),
          base_(irv_ranking(profile, policy)) {}

    const IrvResult& base() const { return base_; }

    void run(MoveDirection direction, int candidate, const std::vector<EligibleGroup>& eligible) {
        if (eligible.empty()) return;
        int dir_rank = direction == MoveDirection::Promote ? 0 : 1;
        // An equal total only ever loses against the current best, so cap
        // the scan strictly below it.
        long long cap = total_count(eligible);
        if (best_key_) {
            auto [best_k, best_dir, best_cand] = *best_key_;
            (void)best_dir;
            (void)best_cand;
            cap = std::min(cap, best_k - 1);
        }
        if (exhaustive_) {
            if (static_cast<int>(eligible.size()) > kExhaustiveMaxGroups ||
                total_count(eligible) > kExhaustiveMaxBallots)
                throw std::invalid_argument(
                    "exhaustive search supports at most 8 eligible groups and 24 movable "
                    "ballots per direction; use the default single-group search");
            std::vector<long long> shares(eligible.size(), 0);
            for (long long k = 1; k <= cap; ++k)
                if (compose(direction, candidate, dir_rank, eligible, shares, 0, k, k)) return;
        } else {
            for (const auto& g : eligible) {
                long long limit = std::min(g.count, cap);
                for (long long k = 1; k <= limit; ++k) {
                    if (try_witness(direction, candidate, dir_rank,
                                    {BallotMove{g.group_index, g.original, g.count, k,
                                                g.transformed}},
                                    k))
                        break;  // minimal k for this group; later groups need smaller
                }
                if (best_key_) cap = std::min(cap, std::get<0>(*best_key_) - 1);
            }
        }
    }

    std::optional<MonotonicityWitness> take() { return std::move(best_); }

private:
    static long long total_count(const std::vector<EligibleGroup>& eligible) {
        long long total = 0;
        for (const auto& g : eligible) total += g.count;
        return total;
    }

    // Enumerates share vectors summing to k, earlier groups greedily first,
    // and stops at the first witness (the minimal-total, earliest-group one).
    bool compose(MoveDirection direction, int candidate, int dir_rank,
                 const std::vector<EligibleGroup>& eligible, std::vector<long long>& shares,
                 size_t i, long long remaining, long long k) {
        if (i == eligible.size()) {
            if (remaining != 0) return false;
            std::vector<BallotMove> moves;
            for (size_t j = 0; j < eligible.size(); ++j)
                if (shares[j] > 0)
                    moves.push_back(BallotMove{eligible[j].group_index, eligible[j].original,
                                               eligible[j].count, shares[j],
                                               eligible[j].transformed});
            return try_witness(direction, candidate, dir_rank, std::move(moves), k);
        }
        for (long long take = std::min(remaining, eligible[i].count); take >= 0; --take) {
            shares[i] = take;
            if (compose(direction, candidate, dir_rank, eligible, shares, i + 1,
                        remaining - take, k))
                return true;
        }
        shares[i] = 0;
        return false;
    }

    bool try_witness(MoveDirection direction, int candidate, int dir_rank,
                     std::vector<BallotMove> moves, long long k) {
        BallotProfile manipulated = apply_moves(profile_, moves);
        IrvResult rerun;
        try {
            rerun = irv_ranking(manipulated, policy_);
        } catch (const TieError&) {
            return false;
        }
        bool flipped = direction == MoveDirection::Promote ? rerun.winner() != candidate
                                                           : rerun.winner() == candidate;
        if (!flipped) return false;
        std::tuple<long long, int, int> key{k, dir_rank, candidate};
        if (best_key_ && !(key < *best_key_)) return true;  // ordered scan: stop anyway
        best_key_ = key;
        best_ = MonotonicityWitness{direction,   candidate,      std::move(moves),
                                    k,           base_.winner(), rerun.winner(),
                                    base_.rounds, rerun.rounds};
        return true;
    }

    const BallotProfile& profile_;
    TiebreakPolicy policy_;
    bool exhaustive_;
    IrvResult base_;
    std::optional<MonotonicityWitness> best_;
    std::optional<std::tuple<long long, int, int>> best_key_;
};

}  // namespace

std::optional<MonotonicityWitness> find_monotonicity_violation(const BallotProfile& profile,
                                                               TiebreakPolicy policy,
                                                               MonotonicityOptions options) {
    WitnessSearch search(profile, policy, options.exhaustive);
    const int winner = search.base().winner();
    const auto& groups = profile.groups();

    if (options.promote) {
        std::vector<EligibleGroup> eligible;
        for (size_t gi = 0; gi < groups.size(); ++gi) {
            const auto& g = groups[gi];
            if (!g.ranking.empty() && g.ranking.front() == winner) continue;
            eligible.push_back(EligibleGroup{static_cast<int>(gi), g.ranking, g.count,
                                             promote_to_first(g.ranking, winner)});
        }
        search.run(MoveDirection::Promote, winner, eligible);
    }
    if (options.demote) {
        for (int c = 0; c < profile.candidate_count(); ++c) {
            if (c == winner) continue;
            std::vector<EligibleGroup> eligible;
            for (size_t gi = 0; gi < groups.size(); ++gi) {
                const auto& g = groups[gi];
                if (g.ranking.empty() || g.ranking.back() == c) continue;
                if (std::find(g.ranking.begin(), g.ranking.end(), c) == g.ranking.end())
                    continue;
                eligible.push_back(EligibleGroup{static_cast<int>(gi), g.ranking, g.count,
                                                 demote_to_last(g.ranking, c)});
            }
            search.run(MoveDirection::Demote, c, eligible);
        }
    }
    return search.take();
}

IiaReport iia_flip_report(const BallotProfile& profile, int removed, TiebreakPolicy policy) {
    if (removed < 0 || removed >= profile.candidate_count())
        throw std::invalid_argument("removed candidate not in roster");
    if (profile.candidate_count() < 3)
        throw std::invalid_argument("IIA check needs at least three candidates");

    IiaReport report;
    report.removed = removed;
    report.before = irv_ranking(profile, policy).ranking;

    std::vector<int> keep;
    for (int id = 0; id < profile.candidate_count(); ++id)
        if (id != removed) keep.push_back(id);
    BallotProfile restricted = profile.restrict_to(keep);

    SocialRanking after_local = irv_ranking(restricted, policy).ranking;
    for (int local : after_local)
        report.after.push_back(*profile.id_of(restricted.name_of(local)));

    std::vector<int> pos_before(static_cast<size_t>(profile.candidate_count()), -1);
    for (size_t i = 0; i < report.before.size(); ++i)
        pos_before[static_cast<size_t>(report.before[i])] = static_cast<int>(i);
    std::vector<int> pos_after(static_cast<size_t>(profile.candidate_count()), -1);
    for (size_t i = 0; i < report.after.size(); ++i)
        pos_after[static_cast<size_t>(report.after[i])] = static_cast<int>(i);

    PairwiseMatrix m = pairwise_matrix(restricted);
    for (int x = 0; x < profile.candidate_count(); ++x) {
        if (x == removed) continue;
        for (int y = x + 1; y < profile.candidate_count(); ++y) {
            if (y == removed) continue;
            bool x_above_before = pos_before[static_cast<size_t>(x)] < pos_before[static_cast<size_t>(y)];
            bool x_above_after = pos_after[static_cast<size_t>(x)] < pos_after[static_cast<size_t>(y)];
            if (x_above_before == x_above_after) continue;
            int above = x_above_before ? x : y;
            int below = x_above_before ? y : x;
            int la = *restricted.id_of(profile.name_of(above));
            int lb = *restricted.id_of(profile.name_of(below));
            report.flips.push_back(PairFlip{above, below, m.beats(la, lb), m.beats(lb, la),
                                            m.abstain(la, lb)});
        }
    }
    return report;
}

}  // namespace rcv
