#include "json_io.hpp"

#include <algorithm>

namespace rcv {

namespace {

int id_from_name(const BallotProfile& profile, const Json& j) {
    auto id = profile.id_of(j.get<std::string>());
    if (!id) throw std::invalid_argument("unknown candidate '" + j.get<std::string>() + "'");
    return *id;
}

std::vector<int> ids_from_names(const BallotProfile& profile, const Json& j) {
    std::vector<int> out;
    for (const auto& name : j) out.push_back(id_from_name(profile, name));
    return out;
}

Json names_json(const BallotProfile& profile, const std::vector<int>& ids) {
    Json out = Json::array();
    for (int id : ids) out.push_back(profile.name_of(id));
    return out;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Tie: return "tie";
    }
    return "fail";
}

Verdict verdict_from_name(const std::string& name) {
    if (name == "pass") return Verdict::Pass;
    if (name == "fail") return Verdict::Fail;
    if (name == "tie") return Verdict::Tie;
    throw std::invalid_argument("unknown verdict '" + name + "'");
}

}  // namespace

const char* profile_kind_name(ProfileKind kind) {
    switch (kind) {
        case ProfileKind::ImpartialCulture: return "impartial-culture";
        case ProfileKind::TruncatedImpartialCulture: return "truncated-impartial-culture";
        case ProfileKind::Fixture: return "fixture";
    }
    return "impartial-culture";
}

ProfileKind profile_kind_from_name(const std::string& name) {
    if (name == "impartial-culture") return ProfileKind::ImpartialCulture;
    if (name == "truncated-impartial-culture") return ProfileKind::TruncatedImpartialCulture;
    if (name == "fixture") return ProfileKind::Fixture;
    throw std::invalid_argument("unknown profile kind '" + name + "'");
}

const char* tiebreak_name(TiebreakPolicy policy) {
    return policy == TiebreakPolicy::ErrorOnTie ? "error-on-tie" : "lowest-id";
}

Json ranking_to_json(const BallotProfile& profile, const SocialRanking& ranking) {
    return names_json(profile, ranking);
}

SocialRanking ranking_from_json(const BallotProfile& profile, const Json& j) {
    return ids_from_names(profile, j);
}

Json round_log_to_json(const BallotProfile& profile, const RoundLog& log) {
    Json tallies = Json::object();
    for (size_t i = 0; i < log.tallies.active.size(); ++i)
        tallies[profile.name_of(log.tallies.active[i])] = log.tallies.votes[i];
    return Json{{"round", log.round},
                {"active", names_json(profile, log.tallies.active)},
                {"tallies", std::move(tallies)},
                {"exhausted", log.tallies.exhausted},
                {"eliminated", profile.name_of(log.eliminated)},
                {"tiebreak_applied", log.tiebreak_applied}};
}

RoundLog round_log_from_json(const BallotProfile& profile, const Json& j) {
    RoundLog log;
    log.round = j.at("round").get<int>();
    log.tallies.active = ids_from_names(profile, j.at("active"));
    std::sort(log.tallies.active.begin(), log.tallies.active.end());
    for (int id : log.tallies.active)
        log.tallies.votes.push_back(j.at("tallies").at(profile.name_of(id)).get<long long>());
    log.tallies.exhausted = j.at("exhausted").get<long long>();
    log.eliminated = id_from_name(profile, j.at("eliminated"));
    log.tiebreak_applied = j.at("tiebreak_applied").get<bool>();
    return log;
}

Json plurality_to_json(const BallotProfile& profile, const SocialRanking& ranking,
                       const TallySet& first_prefs) {
    Json tallies = Json::object();
    for (size_t i = 0; i < first_prefs.active.size(); ++i)
        tallies[profile.name_of(first_prefs.active[i])] = first_prefs.votes[i];
    return Json{{"method", "plurality"},
                {"ranking", ranking_to_json(profile, ranking)},
                {"first_preferences", std::move(tallies)},
                {"exhausted", first_prefs.exhausted}};
}

Json irv_result_to_json(const BallotProfile& profile, const IrvResult& result) {
    Json rounds = Json::array();
    for (const auto& log : result.rounds) rounds.push_back(round_log_to_json(profile, log));
    return Json{{"method", "irv"},
                {"ranking", ranking_to_json(profile, result.ranking)},
                {"rounds", std::move(rounds)}};
}

IrvResult irv_result_from_json(const BallotProfile& profile, const Json& j) {
    IrvResult result;
    result.ranking = ranking_from_json(profile, j.at("ranking"));
    for (const auto& log : j.at("rounds"))
        result.rounds.push_back(round_log_from_json(profile, log));
    return result;
}

Json pairwise_to_json(const BallotProfile& profile, const PairwiseMatrix& matrix) {
    Json pairs = Json::array();
    for (int x = 0; x < matrix.candidate_count(); ++x) {
        for (int y = x + 1; y < matrix.candidate_count(); ++y) {
            pairs.push_back(Json{{"x", profile.name_of(x)},
                                 {"y", profile.name_of(y)},
                                 {"x_votes", matrix.beats(x, y)},
                                 {"y_votes", matrix.beats(y, x)},
                                 {"abstain", matrix.abstain(x, y)}});
        }
    }
    return Json{{"total_ballots", matrix.total_ballots()},
                {"candidates", names_json(profile, profile.all_ids())},
                {"pairs", std::move(pairs)}};
}

PairwiseMatrix pairwise_from_json(const BallotProfile& profile, const Json& j) {
    PairwiseMatrix m(profile.candidate_count(), j.at("total_ballots").get<long long>());
    for (const auto& pair : j.at("pairs")) {
        int x = id_from_name(profile, pair.at("x"));
        int y = id_from_name(profile, pair.at("y"));
        m.add_beats(x, y, pair.at("x_votes").get<long long>());
        m.add_beats(y, x, pair.at("y_votes").get<long long>());
        m.add_abstain(x, y, pair.at("abstain").get<long long>());
    }
    return m;
}

Json condorcet_to_json(const BallotProfile& profile, const CondorcetOutcome& outcome) {
    Json out{{"method", "condorcet"}};
    if (outcome.ranking) {
        out["ranking"] = ranking_to_json(profile, *outcome.ranking);
        out["cycle"] = nullptr;
    } else {
        out["ranking"] = nullptr;
        Json tied = Json::array();
        for (auto [x, y] : outcome.cycle->tied_pairs)
            tied.push_back(Json::array({profile.name_of(x), profile.name_of(y)}));
        out["cycle"] = Json{{"smith_set", names_json(profile, outcome.cycle->smith_set)},
                            {"tied_pairs", std::move(tied)}};
    }
    return out;
}

CondorcetOutcome condorcet_from_json(const BallotProfile& profile, const Json& j) {
    CondorcetOutcome outcome;
    if (!j.at("ranking").is_null()) {
        outcome.ranking = ranking_from_json(profile, j.at("ranking"));
        return outcome;
    }
    CycleReport cycle;
    cycle.smith_set = ids_from_names(profile, j.at("cycle").at("smith_set"));
    std::sort(cycle.smith_set.begin(), cycle.smith_set.end());
    for (const auto& pair : j.at("cycle").at("tied_pairs"))
        cycle.tied_pairs.emplace_back(id_from_name(profile, pair.at(0)),
                                      id_from_name(profile, pair.at(1)));
    outcome.cycle = std::move(cycle);
    return outcome;
}

namespace {

Json pair_verdict_to_json(const BallotProfile& profile, const PairVerdict& pv) {
    Json restriction;
    if (pv.tally.core_restricted)
        restriction = Json{{"kind", "core-support"},
                           {"relative_to", profile.name_of(pv.tally.frame)}};
    else
        restriction = Json{{"kind", "all-ballots"}};
    return Json{{"x", profile.name_of(pv.tally.x)},
                {"y", profile.name_of(pv.tally.y)},
                {"x_votes", pv.tally.x_votes},
                {"y_votes", pv.tally.y_votes},
                {"abstain", pv.tally.abstain},
                {"restriction", std::move(restriction)},
                {"verdict", verdict_name(pv.verdict)}};
}

PairVerdict pair_verdict_from_json(const BallotProfile& profile, const Json& j) {
    PairVerdict pv;
    pv.tally.x = id_from_name(profile, j.at("x"));
    pv.tally.y = id_from_name(profile, j.at("y"));
    pv.tally.x_votes = j.at("x_votes").get<long long>();
    pv.tally.y_votes = j.at("y_votes").get<long long>();
    pv.tally.abstain = j.at("abstain").get<long long>();
    const auto& restriction = j.at("restriction");
    if (restriction.at("kind").get<std::string>() == "core-support") {
        pv.tally.core_restricted = true;
        pv.tally.frame = id_from_name(profile, restriction.at("relative_to"));
    }
    pv.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    return pv;
}

}  // namespace

Json criterion_report_to_json(const BallotProfile& profile, const CriterionReport& report) {
    Json pairs = Json::array();
    for (const auto& pv : report.pairs) pairs.push_back(pair_verdict_to_json(profile, pv));
    return Json{{"criterion", report.criterion == Criterion::CoreSupport ? "core-support"
                                                                         : "broad-support"},
                {"ranking", ranking_to_json(profile, report.ranking)},
                {"pairs", std::move(pairs)},
                {"overall", report.overall_pass ? "pass" : "fail"}};
}

CriterionReport criterion_report_from_json(const BallotProfile& profile, const Json& j) {
    CriterionReport report;
    report.criterion = j.at("criterion").get<std::string>() == "core-support"
                           ? Criterion::CoreSupport
                           : Criterion::BroadSupport;
    report.ranking = ranking_from_json(profile, j.at("ranking"));
    for (const auto& pv : j.at("pairs"))
        report.pairs.push_back(pair_verdict_from_json(profile, pv));
    report.overall_pass = j.at("overall").get<std::string>() == "pass";
    return report;
}

Json monotonicity_witness_to_json(const BallotProfile& profile, const MonotonicityWitness& w) {
    Json moves = Json::array();
    for (const auto& move : w.moves)
        moves.push_back(Json{{"group_index", move.group_index},
                             {"group_ranking", names_json(profile, move.group_ranking)},
                             {"group_count", move.group_count},
                             {"moved", move.moved},
                             {"transformed_ranking",
                              names_json(profile, move.transformed_ranking)}});
    Json original_rounds = Json::array();
    for (const auto& log : w.original_rounds)
        original_rounds.push_back(round_log_to_json(profile, log));
    Json new_rounds = Json::array();
    for (const auto& log : w.new_rounds) new_rounds.push_back(round_log_to_json(profile, log));
    return Json{{"direction", w.direction == MoveDirection::Promote ? "promote" : "demote"},
                {"candidate", profile.name_of(w.candidate)},
                {"moves", std::move(moves)},
                {"total_moved", w.total_moved},
                {"original_winner", profile.name_of(w.original_winner)},
                {"new_winner", profile.name_of(w.new_winner)},
                {"original_rounds", std::move(original_rounds)},
                {"new_rounds", std::move(new_rounds)}};
}

MonotonicityWitness monotonicity_witness_from_json(const BallotProfile& profile, const Json& j) {
    MonotonicityWitness w;
    w.direction = j.at("direction").get<std::string>() == "promote" ? MoveDirection::Promote
                                                                    : MoveDirection::Demote;
    w.candidate = id_from_name(profile, j.at("candidate"));
    for (const auto& move : j.at("moves")) {
        w.moves.push_back(BallotMove{move.at("group_index").get<int>(),
                                     ids_from_names(profile, move.at("group_ranking")),
                                     move.at("group_count").get<long long>(),
                                     move.at("moved").get<long long>(),
                                     ids_from_names(profile, move.at("transformed_ranking"))});
    }
    w.total_moved = j.at("total_moved").get<long long>();
    w.original_winner = id_from_name(profile, j.at("original_winner"));
    w.new_winner = id_from_name(profile, j.at("new_winner"));
    for (const auto& log : j.at("original_rounds"))
        w.original_rounds.push_back(round_log_from_json(profile, log));
    for (const auto& log : j.at("new_rounds"))
        w.new_rounds.push_back(round_log_from_json(profile, log));
    return w;
}

Json monotonicity_to_json(const BallotProfile& profile, TiebreakPolicy policy,
                          MonotonicityOptions options,
                          const std::optional<MonotonicityWitness>& witness) {
    Json directions = Json::array();
    if (options.promote) directions.push_back("promote");
    if (options.demote) directions.push_back("demote");
    Json out{{"policy", tiebreak_name(policy)},
             {"directions", std::move(directions)},
             {"exhaustive", options.exhaustive}};
    out["witness"] = witness ? monotonicity_witness_to_json(profile, *witness) : Json(nullptr);
    return out;
}

Json iia_to_json(const BallotProfile& profile, const IiaReport& report) {
    Json flips = Json::array();
    for (const auto& flip : report.flips) {
        flips.push_back(Json{{"above_before", profile.name_of(flip.above_before)},
                             {"below_before", profile.name_of(flip.below_before)},
                             {"above_votes", flip.above_votes},
                             {"below_votes", flip.below_votes},
                             {"abstain", flip.abstain}});
    }
    return Json{{"removed", profile.name_of(report.removed)},
                {"ranking_before", ranking_to_json(profile, report.before)},
                {"ranking_after", names_json(profile, report.after)},
                {"flips", std::move(flips)}};
}

IiaReport iia_from_json(const BallotProfile& profile, const Json& j) {
    IiaReport report;
    report.removed = id_from_name(profile, j.at("removed"));
    report.before = ranking_from_json(profile, j.at("ranking_before"));
    report.after = ids_from_names(profile, j.at("ranking_after"));
    for (const auto& flip : j.at("flips")) {
        report.flips.push_back(PairFlip{id_from_name(profile, flip.at("above_before")),
                                        id_from_name(profile, flip.at("below_before")),
                                        flip.at("above_votes").get<long long>(),
                                        flip.at("below_votes").get<long long>(),
                                        flip.at("abstain").get<long long>()});
    }
    return report;
}

Json scan_to_json(const ScanSummary& summary) {
    Json general{{"checked", summary.general.checked},
                 {"counterexamples", summary.general.counterexamples},
                 {"first_counterexample", summary.general.first_counterexample
                                              ? Json(*summary.general.first_counterexample)
                                              : Json(nullptr)}};
    return Json{{"generator", Json{{"kind", profile_kind_name(summary.generator.kind)},
                                   {"candidates", summary.generator.candidates},
                                   {"ballots", summary.generator.ballots},
                                   {"seed", summary.generator.seed}}},
                {"trials", summary.trials},
                {"irv_condorcet_agree", summary.agree},
                {"irv_condorcet_disagree", summary.disagree},
                {"condorcet_cycles", summary.cycles},
                {"irv_ties", summary.ties},
                {"monotonicity_witnesses", summary.witnesses},
                {"general_result", std::move(general)}};
}

ScanSummary scan_from_json(const Json& j) {
    ScanSummary summary;
    const auto& g = j.at("generator");
    summary.generator.kind = profile_kind_from_name(g.at("kind").get<std::string>());
    summary.generator.candidates = g.at("candidates").get<int>();
    summary.generator.ballots = g.at("ballots").get<long long>();
    summary.generator.seed = g.at("seed").get<uint64_t>();
    summary.trials = j.at("trials").get<long long>();
    summary.agree = j.at("irv_condorcet_agree").get<long long>();
    summary.disagree = j.at("irv_condorcet_disagree").get<long long>();
    summary.cycles = j.at("condorcet_cycles").get<long long>();
    summary.ties = j.at("irv_ties").get<long long>();
    summary.witnesses = j.at("monotonicity_witnesses").get<long long>();
    summary.general.checked = j.at("general_result").at("checked").get<long long>();
    summary.general.counterexamples =
        j.at("general_result").at("counterexamples").get<long long>();
    const auto& first = j.at("general_result").at("first_counterexample");
    if (!first.is_null()) summary.general.first_counterexample = first.get<std::string>();
    return summary;
}

}  // namespace rcv
