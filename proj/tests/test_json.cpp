#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "core/json_io.hpp"
#include "core/oracle.hpp"
#include "doctest.h"

using namespace rcv;

TEST_CASE("irv results round-trip through json") {
    BallotProfile p = alaska2022_profile();
    IrvResult result = irv_ranking(p);
    Json doc = irv_result_to_json(p, result);
    CHECK(doc.at("method") == "irv");
    CHECK(doc.at("ranking").at(0) == "Peltola");
    CHECK(doc.at("rounds").size() == 2);
    CHECK(irv_result_from_json(p, doc) == result);
}

TEST_CASE("pairwise matrices round-trip through json") {
    BallotProfile p = alaska2022_profile();
    PairwiseMatrix m = pairwise_matrix(p);
    Json doc = pairwise_to_json(p, m);
    CHECK(doc.at("pairs").size() == 3);
    CHECK(pairwise_from_json(p, doc) == m);
}

TEST_CASE("condorcet outcomes round-trip, ranking and cycle variants") {
    BallotProfile p = alaska2022_profile();
    CondorcetOutcome ranked = condorcet_outcome(pairwise_matrix(p));
    CHECK(condorcet_from_json(p, condorcet_to_json(p, ranked)) == ranked);

    BallotProfile cyclic = BallotProfile::parse("1,A>B>C\n1,B>C>A\n1,C>A>B\n");
    CondorcetOutcome cycle = condorcet_outcome(pairwise_matrix(cyclic));
    Json doc = condorcet_to_json(cyclic, cycle);
    CHECK(doc.at("ranking").is_null());
    CHECK(doc.at("cycle").at("smith_set").size() == 3);
    CHECK(condorcet_from_json(cyclic, doc) == cycle);
}

TEST_CASE("criterion reports round-trip for both criteria") {
    BallotProfile p = alaska2022_profile();
    SocialRanking irv = irv_ranking(p).ranking;
    CriterionReport core = check_core_support(p, irv);
    Json core_doc = criterion_report_to_json(p, core);
    CHECK(core_doc.at("overall") == "pass");
    CHECK(core_doc.at("pairs").at(0).at("restriction").at("kind") == "core-support");
    CHECK(criterion_report_from_json(p, core_doc) == core);

    CriterionReport broad = check_broad_support(p, irv);
    Json broad_doc = criterion_report_to_json(p, broad);
    CHECK(broad_doc.at("overall") == "fail");
    CHECK(broad_doc.at("pairs").at(0).at("restriction").at("kind") == "all-ballots");
    CHECK(criterion_report_from_json(p, broad_doc) == broad);
}

TEST_CASE("monotonicity witnesses round-trip with their round logs") {
    BallotProfile p = alaska2022_profile();
    auto witness = find_monotonicity_violation(p);
    REQUIRE(witness.has_value());
    Json doc = monotonicity_witness_to_json(p, *witness);
    CHECK(doc.at("total_moved") == 5164);
    CHECK(doc.at("moves").at(0).at("moved") == 5164);
    CHECK(monotonicity_witness_from_json(p, doc) == *witness);

    Json full = monotonicity_to_json(p, TiebreakPolicy::ErrorOnTie, {true, false}, witness);
    CHECK(full.at("policy") == "error-on-tie");
    CHECK(full.at("directions") == Json::array({"promote"}));
    CHECK_FALSE(full.at("exhaustive").get<bool>());
    CHECK(monotonicity_witness_from_json(p, full.at("witness")) == *witness);

    Json none = monotonicity_to_json(p, TiebreakPolicy::LowestIdEliminated, {true, true},
                                     std::nullopt);
    CHECK(none.at("witness").is_null());
    CHECK(none.at("policy") == "lowest-id");
}

TEST_CASE("iia reports round-trip") {
    BallotProfile p = alaska2022_profile();
    IiaReport report = iia_flip_report(p, *p.id_of("Palin"));
    Json doc = iia_to_json(p, report);
    CHECK(doc.at("removed") == "Palin");
    CHECK(doc.at("flips").size() == 1);
    CHECK(iia_from_json(p, doc) == report);
}

TEST_CASE("scan summaries round-trip, with and without a counterexample string") {
    ScanSummary s = agreement_scan({ProfileKind::ImpartialCulture, 3, 10, 5}, 50);
    CHECK(scan_from_json(scan_to_json(s)) == s);

    s.general.counterexamples = 1;
    s.general.first_counterexample = "#candidates: A,B\n1,A\n";
    CHECK(scan_from_json(scan_to_json(s)) == s);
}

TEST_CASE("json dumps are deterministic") {
    BallotProfile p = alaska2022_profile();
    CHECK(irv_result_to_json(p, irv_ranking(p)).dump(2) ==
          irv_result_to_json(p, irv_ranking(p)).dump(2));
}

TEST_CASE("kind names map both ways") {
    for (ProfileKind kind : {ProfileKind::ImpartialCulture,
                             ProfileKind::TruncatedImpartialCulture, ProfileKind::Fixture})
        CHECK(profile_kind_from_name(profile_kind_name(kind)) == kind);
    CHECK_THROWS_AS(profile_kind_from_name("bogus"), std::invalid_argument);
}
