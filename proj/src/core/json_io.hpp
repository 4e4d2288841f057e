#pragma once

#include "json.hpp"
#include "oracle.hpp"

// Stable JSON shapes for every report the engine produces (schemas in
// docs/formats.md). Counts are integers, candidates appear by name, and
// every to_/from_ pair round-trips exactly.

namespace rcv {

using Json = nlohmann::json;

Json ranking_to_json(const BallotProfile& profile, const SocialRanking& ranking);
SocialRanking ranking_from_json(const BallotProfile& profile, const Json& j);

Json round_log_to_json(const BallotProfile& profile, const RoundLog& log);
RoundLog round_log_from_json(const BallotProfile& profile, const Json& j);

Json plurality_to_json(const BallotProfile& profile, const SocialRanking& ranking,
                       const TallySet& first_prefs);

Json irv_result_to_json(const BallotProfile& profile, const IrvResult& result);
IrvResult irv_result_from_json(const BallotProfile& profile, const Json& j);

Json pairwise_to_json(const BallotProfile& profile, const PairwiseMatrix& matrix);
PairwiseMatrix pairwise_from_json(const BallotProfile& profile, const Json& j);

Json condorcet_to_json(const BallotProfile& profile, const CondorcetOutcome& outcome);
CondorcetOutcome condorcet_from_json(const BallotProfile& profile, const Json& j);

Json criterion_report_to_json(const BallotProfile& profile, const CriterionReport& report);
CriterionReport criterion_report_from_json(const BallotProfile& profile, const Json& j);

Json monotonicity_witness_to_json(const BallotProfile& profile, const MonotonicityWitness& w);
MonotonicityWitness monotonicity_witness_from_json(const BallotProfile& profile, const Json& j);

/// Full document for the monotonicity command: search parameters plus the
/// witness (or null).
Json monotonicity_to_json(const BallotProfile& profile, TiebreakPolicy policy,
                          MonotonicityOptions options,
                          const std::optional<MonotonicityWitness>& witness);

Json iia_to_json(const BallotProfile& profile, const IiaReport& report);
IiaReport iia_from_json(const BallotProfile& profile, const Json& j);

Json scan_to_json(const ScanSummary& summary);
ScanSummary scan_from_json(const Json& j);

const char* profile_kind_name(ProfileKind kind);
ProfileKind profile_kind_from_name(const std::string& name);

const char* tiebreak_name(TiebreakPolicy policy);

}  // namespace rcv
