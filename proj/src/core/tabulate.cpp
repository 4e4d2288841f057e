#include "tabulate.hpp"

#include <algorithm>
#include <numeric>

namespace rcv {

namespace {

std::string join_names(const BallotProfile& profile, const std::vector<int>& ids) {
    std::string out;
    for (size_t i = 0; i < ids.size(); ++i) {
        if (i) out += ", ";
        out += profile.name_of(ids[i]);
    }
    return out;
}

}  // namespace

long long TallySet::votes_for(int id) const {
    for (size_t i = 0; i < active.size(); ++i)
        if (active[i] == id) return votes[i];
    throw std::invalid_argument("candidate not active in this round");
}

size_t PairwiseMatrix::index(int x, int y) const {
    if (x < 0 || x >= n_ || y < 0 || y >= n_ || x == y)
        throw std::invalid_argument("invalid candidate pair");
    return static_cast<size_t>(x) * static_cast<size_t>(n_) + static_cast<size_t>(y);
}

PairwiseMatrix::PairwiseMatrix(int candidates, long long total)
    : n_(candidates),
      total_(total),
      beats_(static_cast<size_t>(candidates) * static_cast<size_t>(candidates), 0),
      abstain_(static_cast<size_t>(candidates) * static_cast<size_t>(candidates), 0) {
    if (candidates < 1) throw std::invalid_argument("roster must not be empty");
}

TallySet first_preferences(const BallotProfile& profile, const std::vector<int>& active) {
    if (active.empty()) throw std::invalid_argument("active set is empty");
    std::vector<char> is_active(static_cast<size_t>(profile.candidate_count()), 0);
    for (int id : active) {
        if (id < 0 || id >= profile.candidate_count())
            throw std::invalid_argument("active set contains unknown candidate id");
        is_active[static_cast<size_t>(id)] = 1;
    }

    std::vector<long long> by_id(static_cast<size_t>(profile.candidate_count()), 0);
    long long exhausted = 0;
    for (const auto& g : profile.groups()) {
        bool counted = false;
        for (int id : g.ranking) {
            if (is_active[static_cast<size_t>(id)]) {
                by_id[static_cast<size_t>(id)] += g.count;
                counted = true;
                break;
            }
        }
        if (!counted) exhausted += g.count;
    }

    TallySet out;
    for (int id = 0; id < profile.candidate_count(); ++id) {
        if (!is_active[static_cast<size_t>(id)]) continue;
        out.active.push_back(id);
        out.votes.push_back(by_id[static_cast<size_t>(id)]);
    }
    out.exhausted = exhausted;
    return out;
}

SocialRanking plurality_ranking(const BallotProfile& profile, TiebreakPolicy policy) {
    TallySet fp = first_preferences(profile, profile.all_ids());

    SocialRanking order = profile.all_ids();
    // Equal counts rank the lower id lower, mirroring lowest-id elimination.
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        long long va = fp.votes_for(a);
        long long vb = fp.votes_for(b);
        if (va != vb) return va > vb;
        return a > b;
    });

    if (policy == TiebreakPolicy::ErrorOnTie) {
        for (size_t i = 0; i + 1 < order.size(); ++i) {
            if (fp.votes_for(order[i]) != fp.votes_for(order[i + 1])) continue;
            long long v = fp.votes_for(order[i]);
            std::vector<int> tied;
            for (int id : order)
                if (fp.votes_for(id) == v) tied.push_back(id);
            std::sort(tied.begin(), tied.end());
            throw TieError(tied, 0,
                           "plurality tie between " + join_names(profile, tied));
        }
    }
    return order;
}

IrvResult irv_ranking(const BallotProfile& profile, TiebreakPolicy policy) {
    std::vector<int> active = profile.all_ids();
    IrvResult result;
    std::vector<int> bottom_up;
    int round = 0;

    while (active.size() > 1) {
        ++round;
        TallySet tallies = first_preferences(profile, active);

        long long min_votes = *std::min_element(tallies.votes.begin(), tallies.votes.end());
        std::vector<int> tied;
        for (size_t i = 0; i < tallies.active.size(); ++i)
            if (tallies.votes[i] == min_votes) tied.push_back(tallies.active[i]);

        bool tiebreak_applied = tied.size() > 1;
        if (tiebreak_applied &&
            (policy == TiebreakPolicy::ErrorOnTie || active.size() == 2)) {
            // Final-round ties are irresolvable under either policy: any pick
            // would invent the top of the social ranking.
            throw TieError(tied, round,
                           "IRV elimination tie in round " + std::to_string(round) + " between " +
                               join_names(profile, tied));
        }
        int eliminated = tied.front();  // lowest id; tallies.active is ascending

        result.rounds.push_back(RoundLog{round, std::move(tallies), eliminated, tiebreak_applied});
        bottom_up.push_back(eliminated);
        active.erase(std::find(active.begin(), active.end(), eliminated));
    }

    bottom_up.push_back(active.front());
    result.ranking.assign(bottom_up.rbegin(), bottom_up.rend());
    return result;
}

PairwiseMatrix pairwise_matrix(const BallotProfile& profile) {
    const int n = profile.candidate_count();
    PairwiseMatrix m(n, profile.total_ballots());
    std::vector<int> pos(static_cast<size_t>(n), -1);

    for (const auto& g : profile.groups()) {
        for (size_t i = 0; i < g.ranking.size(); ++i)
            pos[static_cast<size_t>(g.ranking[i])] = static_cast<int>(i);

        for (int x = 0; x < n; ++x) {
            for (int y = x + 1; y < n; ++y) {
                int px = pos[static_cast<size_t>(x)];
                int py = pos[static_cast<size_t>(y)];
                if (px < 0 && py < 0)
                    m.add_abstain(x, y, g.count);
                else if (py < 0 || (px >= 0 && px < py))
                    m.add_beats(x, y, g.count);
                else
                    m.add_beats(y, x, g.count);
            }
        }

        for (int id : g.ranking) pos[static_cast<size_t>(id)] = -1;
    }
    return m;
}

std::vector<int> smith_set(const PairwiseMatrix& m) {
    const int n = m.candidate_count();
    auto dominates = [&](int x, int y) { return m.beats(x, y) > m.beats(y, x); };

    std::vector<int> wins(static_cast<size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && dominates(x, y)) ++wins[static_cast<size_t>(x)];

    int max_wins = *std::max_element(wins.begin(), wins.end());
    std::vector<char> in_set(static_cast<size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        if (wins[static_cast<size_t>(x)] == max_wins) in_set[static_cast<size_t>(x)] = 1;

    // Close under "not strictly beaten by every member": anyone a member
    // fails to beat must join, until the set dominates all outsiders.
    bool grew = true;
    while (grew) {
        grew = false;
        for (int t = 0; t < n; ++t) {
            if (in_set[static_cast<size_t>(t)]) continue;
            for (int s = 0; s < n; ++s) {
                if (!in_set[static_cast<size_t>(s)] || dominates(s, t)) continue;
                in_set[static_cast<size_t>(t)] = 1;
                grew = true;
                break;
            }
        }
    }

    std::vector<int> out;
    for (int x = 0; x < n; ++x)
        if (in_set[static_cast<size_t>(x)]) out.push_back(x);
    return out;
}

CondorcetOutcome condorcet_outcome(const PairwiseMatrix& m) {
    const int n = m.candidate_count();

    std::vector<std::pair<int, int>> tied;
    std::vector<int> wins(static_cast<size_t>(n), 0);
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (m.beats(x, y) == m.beats(y, x))
                tied.emplace_back(x, y);
            else if (m.beats(x, y) > m.beats(y, x))
                ++wins[static_cast<size_t>(x)];
            else
                ++wins[static_cast<size_t>(y)];
        }
    }

    CondorcetOutcome out;
    if (tied.empty()) {
        SocialRanking order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return wins[static_cast<size_t>(a)] > wins[static_cast<size_t>(b)];
        });
        bool transitive = true;
        for (size_t i = 0; i < order.size() && transitive; ++i)
            for (size_t j = i + 1; j < order.size() && transitive; ++j)
                if (!(m.beats(order[i], order[j]) > m.beats(order[j], order[i])))
                    transitive = false;
        if (transitive) {
            out.ranking = std::move(order);
            return out;
        }
    }
    out.cycle = CycleReport{smith_set(m), std::move(tied)};
    return out;
}

}  // namespace rcv
