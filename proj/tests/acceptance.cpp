// Acceptance suite: runs every release criterion against the bundled Alaska
// data and the randomized property sweeps, printing one pass/fail line per
// criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "core/json_io.hpp"
#include "core/oracle.hpp"

using namespace rcv;

namespace {

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool condition, const std::string& message) {
    if (!condition) throw Failure(message);
}

template <typename T>
void expect_eq(const T& actual, const T& wanted, const std::string& what) {
    if (actual != wanted) {
        std::ostringstream msg;
        msg << what << ": got " << actual << ", wanted " << wanted;
        throw Failure(msg.str());
    }
}

BallotProfile load_fixture_file() {
    std::ifstream in(std::string(RCV_DATA_DIR) + "/alaska2022.csv", std::ios::binary);
    expect(in.good(), "cannot read data/alaska2022.csv");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return BallotProfile::parse(buffer.str());
}

long long fp(const BallotProfile& p, const TallySet& t, const std::string& name) {
    return t.votes_for(*p.id_of(name));
}

SocialRanking by_names(const BallotProfile& p, const std::vector<std::string>& names) {
    SocialRanking out;
    for (const auto& name : names) out.push_back(*p.id_of(name));
    return out;
}

std::string detail;  // extra text appended to the PASS line

void criterion_fixture_totals() {
    BallotProfile p = load_fixture_file();
    expect_eq(p.total_ballots(), 188582LL, "total ballots");
    TallySet t = first_preferences(p, p.all_ids());
    expect_eq(fp(p, t, "Peltola"), 75799LL, "Peltola first preferences");
    expect_eq(fp(p, t, "Palin"), 58973LL, "Palin first preferences");
    expect_eq(fp(p, t, "Begich"), 53810LL, "Begich first preferences");
}

void criterion_irv() {
    BallotProfile p = load_fixture_file();
    IrvResult irv = irv_ranking(p);
    expect(irv.ranking == by_names(p, {"Peltola", "Palin", "Begich"}),
           "IRV ranking is not Peltola > Palin > Begich");
    expect_eq(irv.rounds.size(), size_t{2}, "round count");
    expect_eq(fp(p, irv.rounds[1].tallies, "Peltola"), 91266LL, "round-2 Peltola");
    expect_eq(fp(p, irv.rounds[1].tallies, "Palin"), 86026LL, "round-2 Palin");
    expect_eq(irv.rounds[1].tallies.exhausted, 11290LL, "round-2 exhausted");
}

void criterion_pairwise() {
    BallotProfile p = load_fixture_file();
    PairwiseMatrix m = pairwise_matrix(p);
    int begich = *p.id_of("Begich");
    int palin = *p.id_of("Palin");
    int peltola = *p.id_of("Peltola");
    expect_eq(m.beats(begich, peltola), 87859LL, "Begich vs Peltola");
    expect_eq(m.beats(peltola, begich), 79451LL, "Peltola vs Begich");
    expect_eq(m.abstain(begich, peltola), 21272LL, "Begich/Peltola abstain");
    expect_eq(m.beats(begich, palin), 101217LL, "Begich vs Palin");
    expect_eq(m.beats(palin, begich), 63618LL, "Palin vs Begich");
    expect_eq(m.abstain(begich, palin), 23747LL, "Begich/Palin abstain");
    expect_eq(m.beats(peltola, palin), 91266LL, "Peltola vs Palin");
    expect_eq(m.beats(palin, peltola), 86026LL, "Palin vs Peltola");
    expect_eq(m.abstain(peltola, palin), 11290LL, "Peltola/Palin abstain");
}

void criterion_condorcet() {
    BallotProfile p = load_fixture_file();
    CondorcetOutcome outcome = condorcet_outcome(pairwise_matrix(p));
    SocialRanking wanted = by_names(p, {"Begich", "Peltola", "Palin"});
    expect(outcome.ranking == wanted, "Condorcet ranking is not Begich > Peltola > Palin");

    int passing = 0;
    for (const auto& r : all_rankings(3)) {
        bool pass = check_broad_support(p, r).overall_pass;
        if (pass) {
            ++passing;
            expect(r == wanted, "an unexpected ranking passes broad support");
        }
    }
    expect_eq(passing, 1, "broad-support passer count");
}

void criterion_core_support() {
    BallotProfile p = load_fixture_file();
    SocialRanking irv = by_names(p, {"Peltola", "Palin", "Begich"});
    CriterionReport report = check_core_support(p, irv);
    expect(report.overall_pass, "IRV ranking fails core support");
    expect_eq(report.pairs.size(), size_t{3}, "pair count");
    const long long wanted[3][2] = {{91266, 86026}, {75799, 53810}, {58973, 53810}};
    for (int i = 0; i < 3; ++i) {
        expect_eq(report.pairs[i].tally.x_votes, wanted[i][0], "pair x votes");
        expect_eq(report.pairs[i].tally.y_votes, wanted[i][1], "pair y votes");
    }

    auto passers = rankings_passing_core_support(p);
    expect_eq(passers.size(), size_t{1}, "core-support passer count over 6 permutations");
    expect(passers[0] == irv, "unique passer is not the IRV ranking");
}

void criterion_monotonicity() {
    BallotProfile p = load_fixture_file();
    auto witness = find_monotonicity_violation(p);
    expect(witness.has_value(), "no promote witness found");
    expect_eq(witness->total_moved, 5164LL, "minimal k");
    expect(witness->new_winner == *p.id_of("Begich"), "new winner is not Begich");
    expect(witness->direction == MoveDirection::Promote, "witness direction");

    // Frozen replay values: the bullet-Palin group moves, leaving Palin one
    // vote short of Begich, and Begich takes the final round 87859 to 84615.
    expect(witness->moves.size() == 1 &&
               witness->moves[0].group_ranking == Ranking{*p.id_of("Palin")},
           "moved group is not the bullet-Palin group");
    expect_eq(fp(p, witness->new_rounds[0].tallies, "Palin"), 53809LL, "post-move Palin");
    expect_eq(fp(p, witness->new_rounds[0].tallies, "Begich"), 53810LL, "post-move Begich");
    expect_eq(fp(p, witness->new_rounds[1].tallies, "Begich"), 87859LL, "final Begich");
    expect_eq(fp(p, witness->new_rounds[1].tallies, "Peltola"), 84615LL, "final Peltola");

    BallotProfile moved = apply_moves(p, witness->moves);
    expect(irv_ranking(moved).winner() == witness->new_winner, "witness does not replay");
}

void criterion_iia() {
    BallotProfile p = load_fixture_file();
    IiaReport report = iia_flip_report(p, *p.id_of("Palin"));
    expect_eq(report.flips.size(), size_t{1}, "flip count");
    const PairFlip& flip = report.flips[0];
    expect(flip.above_before == *p.id_of("Peltola") && flip.below_before == *p.id_of("Begich"),
           "flipped pair is not Peltola/Begich");
    expect_eq(flip.below_votes, 87859LL, "Begich pair votes");
    expect_eq(flip.above_votes, 79451LL, "Peltola pair votes");
}

void criterion_continuation() {
    BallotProfile p = load_fixture_file();
    expect_eq(percent_two_decimals(continuation_rate(p, *p.id_of("Begich"))),
              std::string("79.02"), "Begich rate");
    expect_eq(percent_two_decimals(continuation_rate(p, *p.id_of("Palin"))),
              std::string("63.93"), "Palin rate");
    expect_eq(percent_two_decimals(continuation_rate(p, *p.id_of("Peltola"))),
              std::string("68.67"), "Peltola rate");
}

void criterion_property_suite() {
    auto start = std::chrono::steady_clock::now();
    const int trials = 1000;
    int tie_free = 0;
    int condorcet_orders = 0;
    int witnesses = 0;

    for (int i = 0; i < trials; ++i) {
        auto seed = static_cast<uint64_t>(i);
        ProfileKind kind =
            i % 2 ? ProfileKind::TruncatedImpartialCulture : ProfileKind::ImpartialCulture;
        int n = 2 + i % 3;                        // 2..4 candidates
        long long b = 5 + i % 26;                 // 5..30 ballots
        BallotProfile p = generate_profile({kind, n, b, seed});

        std::optional<IrvResult> irv;
        try {
            irv = irv_ranking(p);
        } catch (const TieError&) {
        }

        if (irv) {
            ++tie_free;
            auto passers = rankings_passing_core_support(p);
            expect_eq(passers.size(), size_t{1}, "passer count (trial " + std::to_string(i) + ")");
            expect(passers[0] == irv->ranking,
                   "unique passer differs from IRV (trial " + std::to_string(i) + ")");
        }

        CondorcetOutcome outcome = condorcet_outcome(pairwise_matrix(p));
        std::vector<SocialRanking> broad_passers;
        for (const auto& r : all_rankings(n))
            if (check_broad_support(p, r).overall_pass) broad_passers.push_back(r);
        if (outcome.has_ranking()) {
            ++condorcet_orders;
            expect(broad_passers.size() == 1 && broad_passers[0] == *outcome.ranking,
                   "Condorcet order is not the unique broad passer (trial " + std::to_string(i) +
                       ")");
        } else {
            expect(broad_passers.empty(),
                   "a ranking passes broad support despite no Condorcet order (trial " +
                       std::to_string(i) + ")");
        }

        if (irv) {
            auto witness =
                find_monotonicity_violation(p, TiebreakPolicy::ErrorOnTie, {true, true});
            if (witness) {
                ++witnesses;
                BallotProfile moved = apply_moves(p, witness->moves);
                expect(irv_ranking(moved).winner() == witness->new_winner,
                       "witness fails to replay (trial " + std::to_string(i) + ")");
            }
        }
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    expect(elapsed <= 60, "property suite exceeded 60 seconds");
    expect(tie_free > trials / 2, "too few tie-free trials to be meaningful");
    std::ostringstream d;
    d << "(" << trials << " profiles: " << tie_free << " tie-free, " << condorcet_orders
      << " Condorcet orders, " << witnesses << " witnesses replayed, " << elapsed << "s)";
    detail = d.str();
}

void criterion_disagreement_scan() {
    ScanSummary s = agreement_scan({ProfileKind::ImpartialCulture, 3, 25, 7}, 10000);
    expect_eq(s.trials, 10000LL, "trials");
    expect(s.agree >= 0 && s.disagree >= 0 && s.cycles >= 0 && s.ties >= 0 && s.witnesses >= 0,
           "negative count in summary");
    expect(s.agree + s.disagree <= s.trials, "agree+disagree exceeds trials");
    expect(s.agree + s.disagree >= s.trials - s.ties - s.cycles,
           "agree+disagree misses decisive trials");
    expect(s.general.checked <= s.disagree, "checked exceeds disagreements");
    expect(s.general.counterexamples <= s.general.checked, "counterexamples exceed checked");
    expect(scan_from_json(scan_to_json(s)) == s, "summary does not round-trip through JSON");
    std::ostringstream d;
    d << "(" << s.general.checked << " disagreements checked, " << s.general.counterexamples
      << " counterexamples";
    if (s.general.first_counterexample) d << "; first: " << *s.general.first_counterexample;
    d << ")";
    detail = d.str();
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"alaska fixture totals and first preferences", criterion_fixture_totals},
        {"irv ranking and round tallies", criterion_irv},
        {"pairwise matrix", criterion_pairwise},
        {"condorcet order, unique broad-support passer", criterion_condorcet},
        {"core support pair tallies, unique passer of 6", criterion_core_support},
        {"monotonicity witness k=5164", criterion_monotonicity},
        {"iia flip when palin is removed", criterion_iia},
        {"continuation rates", criterion_continuation},
        {"randomized property suite", criterion_property_suite},
        {"3-candidate disagreement-pattern scan", criterion_disagreement_scan},
    };

    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        detail.clear();
        std::string label = std::to_string(i + 1) + ". " + criteria[i].first;
        try {
            criteria[i].second();
            std::cout << "PASS " << label;
            if (!detail.empty()) std::cout << " " << detail;
            std::cout << "\n";
        } catch (const std::exception& e) {
            ++failed;
            std::cout << "FAIL " << label << " — " << e.what() << "\n";
        }
    }

    if (failed) {
        std::cout << failed << " of " << criteria.size() << " criteria FAILED\n";
        return 1;
    }
    std::cout << "all " << criteria.size() << " criteria passed\n";
    return 0;
}
