// Command-line front-end for the rcv engine. Links the public C API only;
// composite results arrive as JSON documents and are rendered to text here.
//
// Exit codes: 0 success, 2 usage/parse errors, 3 analysis failure values
// (tally tie, cycle where a ranking was required, undefined rate).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rcv.h"

namespace {

using nlohmann::json;

constexpr int kExitUsage = 2;
constexpr int kExitAnalysis = 3;
constexpr int kExitInternal = 1;

struct ProfileDeleter {
    void operator()(rcv_profile* p) const { rcv_profile_free(p); }
};
using ProfilePtr = std::unique_ptr<rcv_profile, ProfileDeleter>;

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void fail(int exit_code, const std::string& message) {
    throw CliError{exit_code, message};
}

[[noreturn]] void fail_status(rcv_status status) {
    int code = kExitInternal;
    if (status == RCV_ERR_PARSE || status == RCV_ERR_INVALID_ARGUMENT) code = kExitUsage;
    if (status == RCV_ERR_TIE || status == RCV_ERR_UNDEFINED) code = kExitAnalysis;
    fail(code, rcv_last_error());
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(kExitUsage, "cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ProfilePtr load_profile(const std::string& path) {
    std::string text = read_file(path);
    rcv_profile* raw = nullptr;
    if (rcv_profile_parse(text.c_str(), &raw) != RCV_OK)
        fail(kExitUsage, path + ": " + rcv_last_error());
    return ProfilePtr(raw);
}

// Takes ownership of the C string and parses it.
json take_json(char* text) {
    json parsed = json::parse(text);
    rcv_string_free(text);
    return parsed;
}

rcv_tiebreak tiebreak_of(const std::string& name) {
    return name == "lowest-id" ? RCV_TIEBREAK_LOWEST_ID : RCV_TIEBREAK_ERROR;
}

std::string ranking_text(const json& names) {
    std::string out;
    for (const auto& name : names) {
        if (!out.empty()) out += " > ";
        out += name.get<std::string>();
    }
    return out;
}

std::string list_text(const json& names) {
    std::string out;
    for (const auto& name : names) {
        if (!out.empty()) out += ", ";
        out += name.get<std::string>();
    }
    return out;
}

std::string round_text(const json& round, const std::string& label) {
    std::string out = label + " " + std::to_string(round.at("round").get<int>()) + ": ";
    bool first = true;
    for (const auto& name : round.at("active")) {
        if (!first) out += ", ";
        first = false;
        auto key = name.get<std::string>();
        out += key + " " + std::to_string(round.at("tallies").at(key).get<long long>());
    }
    out += "; exhausted " + std::to_string(round.at("exhausted").get<long long>());
    out += " -> eliminated " + round.at("eliminated").get<std::string>();
    if (round.at("tiebreak_applied").get<bool>()) out += " (tie broken by lowest id)";
    return out;
}

void emit_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json tabulate_doc(const rcv_profile* profile, rcv_method method, rcv_tiebreak tiebreak) {
    char* out = nullptr;
    rcv_status status = rcv_tabulate(profile, method, tiebreak, &out);
    if (status != RCV_OK) fail_status(status);
    return take_json(out);
}

void print_condorcet_cycle(const json& cycle) {
    std::cout << "No transitive Condorcet ranking exists.\n";
    std::cout << "Smith set: " << list_text(cycle.at("smith_set")) << "\n";
    if (!cycle.at("tied_pairs").empty()) {
        std::string pairs;
        for (const auto& pair : cycle.at("tied_pairs")) {
            if (!pairs.empty()) pairs += ", ";
            pairs += pair.at(0).get<std::string>() + " = " + pair.at(1).get<std::string>();
        }
        std::cout << "Tied pairs: " << pairs << "\n";
    }
}

int cmd_tabulate(const std::string& file, const std::string& method_name,
                 const std::string& tiebreak, bool as_json) {
    ProfilePtr profile = load_profile(file);
    rcv_method method = RCV_METHOD_PLURALITY;
    if (method_name == "irv") method = RCV_METHOD_IRV;
    if (method_name == "condorcet") method = RCV_METHOD_CONDORCET;

    json doc = tabulate_doc(profile.get(), method, tiebreak_of(tiebreak));
    bool cycle = method == RCV_METHOD_CONDORCET && doc.at("ranking").is_null();

    if (as_json) {
        emit_json(doc);
        return cycle ? kExitAnalysis : 0;
    }

    if (cycle) {
        print_condorcet_cycle(doc.at("cycle"));
        return kExitAnalysis;  // a ranking was required
    }

    if (method == RCV_METHOD_PLURALITY) {
        std::cout << "Plurality social ranking: " << ranking_text(doc.at("ranking")) << "\n";
        std::cout << "Winner: " << doc.at("ranking").at(0).get<std::string>() << "\n";
        std::string tallies;
        for (const auto& name : doc.at("ranking")) {
            if (!tallies.empty()) tallies += ", ";
            auto key = name.get<std::string>();
            tallies += key + " " +
                       std::to_string(doc.at("first_preferences").at(key).get<long long>());
        }
        std::cout << "First preferences: " << tallies << "; exhausted "
                  << doc.at("exhausted").get<long long>() << "\n";
    } else if (method == RCV_METHOD_IRV) {
        std::cout << "IRV social ranking: " << ranking_text(doc.at("ranking")) << "\n";
        std::cout << "Winner: " << doc.at("ranking").at(0).get<std::string>() << "\n";
        for (const auto& round : doc.at("rounds"))
            std::cout << round_text(round, "Round") << "\n";
    } else {
        std::cout << "Condorcet social ranking: " << ranking_text(doc.at("ranking")) << "\n";
        std::cout << "Winner: " << doc.at("ranking").at(0).get<std::string>() << "\n";
    }
    return 0;
}

int cmd_pairwise(const std::string& file, bool as_json) {
    ProfilePtr profile = load_profile(file);
    char* out = nullptr;
    rcv_status status = rcv_pairwise(profile.get(), &out);
    if (status != RCV_OK) fail_status(status);
    json doc = take_json(out);
    if (as_json) {
        emit_json(doc);
        return 0;
    }
    std::cout << "Total ballots: " << doc.at("total_ballots").get<long long>() << "\n";
    for (const auto& pair : doc.at("pairs")) {
        std::cout << pair.at("x").get<std::string>() << " vs " << pair.at("y").get<std::string>()
                  << ": " << pair.at("x_votes").get<long long>() << " to "
                  << pair.at("y_votes").get<long long>() << ", abstain "
                  << pair.at("abstain").get<long long>() << "\n";
    }
    return 0;
}

std::vector<int> resolve_ranking(const rcv_profile* profile, const std::string& ranking_flag,
                                 const std::string& from_flag, const std::string& tiebreak) {
    if (!ranking_flag.empty()) {
        int n = rcv_profile_candidate_count(profile);
        std::vector<int> ids(static_cast<size_t>(n), -1);
        int len = 0;
        if (rcv_parse_ranking(profile, ranking_flag.c_str(), ids.data(), n, &len) != RCV_OK)
            fail(kExitUsage, rcv_last_error());
        ids.resize(static_cast<size_t>(len));
        return ids;
    }
    rcv_method method = from_flag == "condorcet" ? RCV_METHOD_CONDORCET : RCV_METHOD_IRV;
    json doc = tabulate_doc(profile, method, tiebreak_of(tiebreak));
    if (doc.at("ranking").is_null())
        fail(kExitAnalysis, "no transitive Condorcet ranking exists for this profile");
    std::vector<int> ids;
    for (const auto& name : doc.at("ranking"))
        ids.push_back(rcv_profile_candidate_id(profile, name.get<std::string>().c_str()));
    return ids;
}

int cmd_check(const std::string& file, const std::string& criterion_name,
              const std::string& ranking_flag, const std::string& from_flag,
              const std::string& tiebreak, bool as_json) {
    ProfilePtr profile = load_profile(file);
    std::vector<int> ranking = resolve_ranking(profile.get(), ranking_flag, from_flag, tiebreak);

    rcv_criterion criterion =
        criterion_name == "broad" ? RCV_CRITERION_BROAD : RCV_CRITERION_CORE;
    char* out = nullptr;
    rcv_status status = rcv_check(profile.get(), criterion, ranking.data(),
                                  static_cast<int>(ranking.size()), &out);
    if (status != RCV_OK) fail_status(status);
    json doc = take_json(out);

    if (as_json) {
        emit_json(doc);
        return 0;
    }

    std::cout << "Criterion: "
              << (criterion == RCV_CRITERION_CORE ? "core support" : "broad support") << "\n";
    std::cout << "Ranking: " << ranking_text(doc.at("ranking")) << "\n";
    for (const auto& pair : doc.at("pairs")) {
        std::string restriction =
            pair.at("restriction").at("kind").get<std::string>() == "all-ballots"
                ? "all ballots"
                : "core support relative to " +
                      pair.at("restriction").at("relative_to").get<std::string>();
        std::string verdict = pair.at("verdict").get<std::string>();
        for (auto& c : verdict) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        std::cout << pair.at("x").get<std::string>() << " > " << pair.at("y").get<std::string>()
                  << " : " << pair.at("x_votes").get<long long>() << " vs "
                  << pair.at("y_votes").get<long long>() << " (abstain "
                  << pair.at("abstain").get<long long>() << ") [" << restriction << "] — "
                  << verdict << "\n";
    }
    std::cout << "Overall: " << (doc.at("overall").get<std::string>() == "pass" ? "PASS" : "FAIL")
              << "\n";
    return 0;
}

int cmd_monotonicity(const std::string& file, const std::string& direction, bool exhaustive,
                     const std::string& tiebreak, bool as_json) {
    ProfilePtr profile = load_profile(file);
    int flags = 0;
    if (direction == "promote" || direction == "both") flags |= RCV_DIRECTION_PROMOTE;
    if (direction == "demote" || direction == "both") flags |= RCV_DIRECTION_DEMOTE;
    if (exhaustive) flags |= RCV_SEARCH_EXHAUSTIVE;

    char* out = nullptr;
    rcv_status status = rcv_monotonicity(profile.get(), tiebreak_of(tiebreak), flags, &out);
    if (status != RCV_OK) fail_status(status);
    json doc = take_json(out);

    if (as_json) {
        emit_json(doc);
        return 0;
    }

    std::string searched = list_text(doc.at("directions"));
    if (doc.at("witness").is_null()) {
        std::cout << "No monotonicity violation found (searched: " << searched << ").\n";
        return 0;
    }
    const json& w = doc.at("witness");
    auto ballot = [](const json& names) {
        std::string text;
        for (const auto& name : names) {
            if (!text.empty()) text += ">";
            text += name.get<std::string>();
        }
        return text.empty() ? std::string("(empty)") : text;
    };
    std::cout << "Monotonicity violation (" << w.at("direction").get<std::string>()
              << "): moving " << w.at("total_moved").get<long long>()
              << " ballots changes the winner from "
              << w.at("original_winner").get<std::string>() << " to "
              << w.at("new_winner").get<std::string>() << "\n";
    for (const json& move : w.at("moves"))
        std::cout << "  " << move.at("moved").get<long long>() << " of "
                  << move.at("group_count").get<long long>() << " ballots '"
                  << ballot(move.at("group_ranking")) << "' -> '"
                  << ballot(move.at("transformed_ranking")) << "' (group "
                  << move.at("group_index").get<int>() + 1 << ")\n";
    for (const auto& round : w.at("new_rounds"))
        std::cout << round_text(round, "Rerun round") << "\n";
    return 0;
}

int cmd_iia(const std::string& file, const std::string& removed, const std::string& tiebreak,
            bool as_json) {
    ProfilePtr profile = load_profile(file);
    int removed_id = rcv_profile_candidate_id(profile.get(), removed.c_str());
    if (removed_id < 0) fail(kExitUsage, "unknown candidate '" + removed + "'");

    char* out = nullptr;
    rcv_status status = rcv_iia(profile.get(), removed_id, tiebreak_of(tiebreak), &out);
    if (status != RCV_OK) fail_status(status);
    json doc = take_json(out);

    if (as_json) {
        emit_json(doc);
        return 0;
    }

    std::cout << "IRV ranking: " << ranking_text(doc.at("ranking_before")) << "\n";
    std::cout << "IRV ranking without " << removed << ": "
              << ranking_text(doc.at("ranking_after")) << "\n";
    if (doc.at("flips").empty()) {
        std::cout << "No pairs flip.\n";
        return 0;
    }
    std::cout << "Flipped pairs:\n";
    for (const auto& flip : doc.at("flips")) {
        std::cout << "  " << flip.at("above_before").get<std::string>() << " > "
                  << flip.at("below_before").get<std::string>() << " becomes "
                  << flip.at("below_before").get<std::string>() << " > "
                  << flip.at("above_before").get<std::string>() << " (pair election: "
                  << flip.at("below_votes").get<long long>() << " to "
                  << flip.at("above_votes").get<long long>() << ", abstain "
                  << flip.at("abstain").get<long long>() << ")\n";
    }
    return 0;
}

int cmd_compare(const std::string& file, const std::string& tiebreak, bool as_json) {
    ProfilePtr profile = load_profile(file);
    json irv = tabulate_doc(profile.get(), RCV_METHOD_IRV, tiebreak_of(tiebreak));
    json condorcet = tabulate_doc(profile.get(), RCV_METHOD_CONDORCET, tiebreak_of(tiebreak));

    std::string irv_winner = irv.at("ranking").at(0).get<std::string>();
    bool has_condorcet = !condorcet.at("ranking").is_null();
    json agree = has_condorcet
                     ? json(irv_winner == condorcet.at("ranking").at(0).get<std::string>())
                     : json(nullptr);

    if (as_json) {
        emit_json(json{{"irv", irv}, {"condorcet", condorcet}, {"agree", agree}});
        return 0;
    }

    if (!has_condorcet) {
        std::cout << "IRV: " << irv_winner << " | Condorcet: cycle — INCOMPARABLE\n";
        std::cout << "IRV ranking: " << ranking_text(irv.at("ranking")) << "\n";
        std::cout << "Condorcet ranking: none (Smith set: "
                  << list_text(condorcet.at("cycle").at("smith_set")) << ")\n";
        return 0;
    }
    std::string condorcet_winner = condorcet.at("ranking").at(0).get<std::string>();
    std::cout << "IRV: " << irv_winner << " | Condorcet: " << condorcet_winner
              << (agree.get<bool>() ? " — AGREE" : " — DISAGREE") << "\n";
    std::cout << "IRV ranking: " << ranking_text(irv.at("ranking")) << "\n";
    std::cout << "Condorcet ranking: " << ranking_text(condorcet.at("ranking")) << "\n";
    return 0;
}

int cmd_continuation(const std::string& file, const std::string& candidate, bool as_json) {
    ProfilePtr profile = load_profile(file);

    std::vector<int> ids;
    if (!candidate.empty()) {
        int id = rcv_profile_candidate_id(profile.get(), candidate.c_str());
        if (id < 0) fail(kExitUsage, "unknown candidate '" + candidate + "'");
        ids.push_back(id);
    } else {
        for (int id = 0; id < rcv_profile_candidate_count(profile.get()); ++id)
            ids.push_back(id);
    }

    json rates = json::array();
    for (int id : ids) {
        long long continuing = 0;
        long long first = 0;
        rcv_status status = rcv_continuation_rate(profile.get(), id, &continuing, &first);
        std::string name = rcv_profile_candidate_name(profile.get(), id);
        if (status == RCV_ERR_UNDEFINED && candidate.empty()) {
            rates.push_back(json{{"candidate", name},
                                 {"continuing", nullptr},
                                 {"first_preferences", 0},
                                 {"percent", nullptr}});
            continue;
        }
        if (status != RCV_OK) fail_status(status);
        // Two decimals, half-up; counts stay exact integers.
        long long basis_points = (continuing * 10000 + first / 2) / first;
        char percent[32];
        std::snprintf(percent, sizeof percent, "%lld.%02lld", basis_points / 100,
                      basis_points % 100);
        rates.push_back(json{{"candidate", name},
                             {"continuing", continuing},
                             {"first_preferences", first},
                             {"percent", percent}});
    }

    if (as_json) {
        emit_json(json{{"rates", rates}});
        return 0;
    }
    for (const auto& rate : rates) {
        std::cout << rate.at("candidate").get<std::string>() << ": ";
        if (rate.at("percent").is_null()) {
            std::cout << "no first-preference ballots\n";
            continue;
        }
        std::cout << rate.at("continuing").get<long long>() << "/"
                  << rate.at("first_preferences").get<long long>() << " = "
                  << rate.at("percent").get<std::string>() << "%\n";
    }
    return 0;
}

int cmd_scan(const std::string& kind, int candidates, long long ballots, uint64_t seed,
             long long trials, bool as_json) {
    char* out = nullptr;
    rcv_status status = rcv_agreement_scan(kind.c_str(), candidates, ballots, seed, trials, &out);
    if (status != RCV_OK) fail_status(status);
    json doc = take_json(out);

    if (as_json) {
        emit_json(doc);
        return 0;
    }

    const json& generator = doc.at("generator");
    std::cout << "Scan: kind " << generator.at("kind").get<std::string>() << ", candidates "
              << generator.at("candidates").get<int>() << ", ballots "
              << generator.at("ballots").get<long long>() << ", seed "
              << generator.at("seed").get<uint64_t>() << ", trials "
              << doc.at("trials").get<long long>() << "\n";
    std::cout << "IRV/Condorcet agree: " << doc.at("irv_condorcet_agree").get<long long>() << "\n";
    std::cout << "IRV/Condorcet disagree: " << doc.at("irv_condorcet_disagree").get<long long>()
              << "\n";
    std::cout << "Condorcet cycles: " << doc.at("condorcet_cycles").get<long long>() << "\n";
    std::cout << "IRV ties: " << doc.at("irv_ties").get<long long>() << "\n";
    std::cout << "Monotonicity witnesses: " << doc.at("monotonicity_witnesses").get<long long>()
              << "\n";
    const json& general = doc.at("general_result");
    std::cout << "3-candidate disagreements checked: " << general.at("checked").get<long long>()
              << ", counterexamples: " << general.at("counterexamples").get<long long>() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ranked-ballot election analysis: plurality, IRV, and Condorcet tabulation "
                 "with majority-rule criterion checks"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", rcv_version());

    bool as_json = false;
    app.add_flag("--json", as_json, "Emit JSON instead of text");

    std::string file;
    std::string method;
    std::string tiebreak = "error";
    std::string criterion;
    std::string ranking_flag;
    std::string from_flag;
    std::string direction = "promote";
    bool exhaustive = false;
    std::string removed;
    std::string candidate;
    std::string kind = "impartial-culture";
    int candidates = 3;
    long long ballots = 25;
    uint64_t seed = 0;
    long long trials = 1000;

    auto add_tiebreak = [&](CLI::App* cmd) {
        cmd->add_option("--tiebreak", tiebreak, "Tally tie handling")
            ->check(CLI::IsMember({"error", "lowest-id"}))
            ->capture_default_str();
    };

    CLI::App* tabulate = app.add_subcommand("tabulate", "Compute a social ranking");
    tabulate->add_option("file", file, "Ballot file")->required();
    tabulate->add_option("--method", method, "Voting method")
        ->check(CLI::IsMember({"plurality", "irv", "condorcet"}))
        ->required();
    add_tiebreak(tabulate);

    CLI::App* pairwise = app.add_subcommand("pairwise", "Full-ballot pair-election matrix");
    pairwise->add_option("file", file, "Ballot file")->required();

    CLI::App* check = app.add_subcommand("check", "Check a criterion against a ranking");
    check->add_option("file", file, "Ballot file")->required();
    check->add_option("--criterion", criterion, "Criterion to check")
        ->check(CLI::IsMember({"core", "broad"}))
        ->required();
    check->add_option("--ranking", ranking_flag, "Explicit ranking, e.g. \"A>B>C\"");
    check->add_option("--from", from_flag, "Take the ranking from a method")
        ->check(CLI::IsMember({"irv", "condorcet"}));
    add_tiebreak(check);

    CLI::App* monotonicity =
        app.add_subcommand("monotonicity", "Search for a monotonicity violation");
    monotonicity->add_option("file", file, "Ballot file")->required();
    monotonicity->add_option("--direction", direction, "Manipulation direction")
        ->check(CLI::IsMember({"promote", "demote", "both"}))
        ->capture_default_str();
    monotonicity->add_flag("--exhaustive", exhaustive,
                           "Also combine moves across groups (small profiles only)");
    add_tiebreak(monotonicity);

    CLI::App* iia = app.add_subcommand("iia", "Report pair flips when a candidate is removed");
    iia->add_option("file", file, "Ballot file")->required();
    iia->add_option("--remove", removed, "Candidate to remove")->required();
    add_tiebreak(iia);

    CLI::App* compare = app.add_subcommand("compare", "IRV and Condorcet side by side");
    compare->add_option("file", file, "Ballot file")->required();
    add_tiebreak(compare);

    CLI::App* continuation =
        app.add_subcommand("continuation-rate",
                           "Share of first-preference ballots ranking a further candidate");
    continuation->add_option("file", file, "Ballot file")->required();
    continuation->add_option("--candidate", candidate, "Single candidate to report");

    CLI::App* scan = app.add_subcommand("scan", "Agreement scan over generated profiles");
    scan->add_option("--kind", kind, "Profile generator")
        ->check(CLI::IsMember({"impartial-culture", "truncated-impartial-culture", "fixture"}))
        ->capture_default_str();
    scan->add_option("--candidates", candidates, "Roster size")->capture_default_str();
    scan->add_option("--ballots", ballots, "Ballots per profile")->capture_default_str();
    scan->add_option("--seed", seed, "Base seed")->capture_default_str();
    scan->add_option("--trials", trials, "Number of profiles")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (tabulate->parsed()) return cmd_tabulate(file, method, tiebreak, as_json);
        if (pairwise->parsed()) return cmd_pairwise(file, as_json);
        if (check->parsed()) {
            if (ranking_flag.empty() == from_flag.empty())
                fail(kExitUsage, "provide exactly one of --ranking or --from");
            return cmd_check(file, criterion, ranking_flag, from_flag, tiebreak, as_json);
        }
        if (monotonicity->parsed())
            return cmd_monotonicity(file, direction, exhaustive, tiebreak, as_json);
        if (iia->parsed()) return cmd_iia(file, removed, tiebreak, as_json);
        if (compare->parsed()) return cmd_compare(file, tiebreak, as_json);
        if (continuation->parsed()) return cmd_continuation(file, candidate, as_json);
        if (scan->parsed()) return cmd_scan(kind, candidates, ballots, seed, trials, as_json);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    }
    return kExitUsage;
}
