#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace rcv {

namespace {

std::string letter_name(int i) {
    if (i < 26) return std::string(1, static_cast<char>('A' + i));
    return "C" + std::to_string(i);
}

}  // namespace

BallotProfile generate_profile(const ProfileGenerator& generator) {
    if (generator.kind == ProfileKind::Fixture) return alaska2022_profile();

    const int n = generator.candidates;
    if (n < 1 || n > 26) throw std::invalid_argument("candidates must be between 1 and 26");
    if (generator.ballots < 0 || generator.ballots > 1'000'000)
        throw std::invalid_argument("ballots must be between 0 and 1000000");

    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back(letter_name(i));

    SplitMix64 rng(generator.seed);
    std::vector<BallotGroup> groups;
    groups.reserve(static_cast<size_t>(generator.ballots));
    for (long long b = 0; b < generator.ballots; ++b) {
        Ranking perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i >= 1; --i) {
            auto j = static_cast<size_t>(rng.next_below(static_cast<uint64_t>(i) + 1));
            std::swap(perm[static_cast<size_t>(i)], perm[j]);
        }
        if (generator.kind == ProfileKind::TruncatedImpartialCulture) {
            auto cut = static_cast<size_t>(rng.next_below(static_cast<uint64_t>(n) + 1));
            perm.resize(cut);
        }
        groups.push_back(BallotGroup{std::move(perm), 1});
    }
    return BallotProfile(std::move(names), std::move(groups));
}

std::vector<SocialRanking> all_rankings(int n) {
    if (n < 1) throw std::invalid_argument("roster must not be empty");
    if (n > 8) throw std::invalid_argument("all_rankings supports at most 8 candidates");
    SocialRanking base(static_cast<size_t>(n));
    std::iota(base.begin(), base.end(), 0);
    std::vector<SocialRanking> out;
    do {
        out.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

std::vector<SocialRanking> rankings_passing_core_support(const BallotProfile& profile) {
    std::vector<SocialRanking> passing;
    for (auto& ranking : all_rankings(profile.candidate_count()))
        if (check_core_support(profile, ranking).overall_pass) passing.push_back(ranking);
    return passing;
}

ScanSummary agreement_scan(const ProfileGenerator& generator, long long trials) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");

    ScanSummary summary;
    summary.generator = generator;
    summary.trials = trials;

    for (long long t = 0; t < trials; ++t) {
        ProfileGenerator g = generator;
        g.seed = generator.seed + static_cast<uint64_t>(t);
        BallotProfile profile = generate_profile(g);

        std::optional<IrvResult> irv;
        try {
            irv = irv_ranking(profile, TiebreakPolicy::ErrorOnTie);
        } catch (const TieError&) {
            ++summary.ties;
        }

        CondorcetOutcome condorcet = condorcet_outcome(pairwise_matrix(profile));
        if (!condorcet.has_ranking()) ++summary.cycles;

        if (irv && condorcet.has_ranking()) {
            const SocialRanking& c = *condorcet.ranking;
            if (irv->winner() == c.front())
                ++summary.agree;
            else
                ++summary.disagree;

            if (profile.candidate_count() == 3 && irv->winner() != c.front()) {
                ++summary.general.checked;
                bool pattern_holds =
                    irv->ranking.back() == c.front() && c[1] == irv->winner();
                if (!pattern_holds) {
                    ++summary.general.counterexamples;
                    if (!summary.general.first_counterexample)
                        summary.general.first_counterexample = profile.serialize();
                }
            }
        }

        if (irv &&
            find_monotonicity_violation(profile, TiebreakPolicy::ErrorOnTie, {true, false}))
            ++summary.witnesses;
    }
    return summary;
}

}  // namespace rcv
