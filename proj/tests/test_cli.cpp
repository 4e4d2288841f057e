// Golden-file and exit-code tests for the rcv command-line tool. The binary
// path and data/golden directories come in as compile definitions.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(RCV_CLI_PATH) + " " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    size_t n;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string alaska() { return std::string(RCV_DATA_DIR) + "/alaska2022.csv"; }

void check_golden(const std::string& args, const std::string& golden_name) {
    CAPTURE(args);
    RunResult result = run_cli(args);
    CHECK(result.exit_code == 0);
    CHECK(result.output == read_file(fs::path(RCV_GOLDEN_DIR) / golden_name));
}

// Scratch ballot file living for one test.
struct TempBallots {
    fs::path path;
    explicit TempBallots(const std::string& text) {
        path = fs::temp_directory_path() /
               ("rcv_cli_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter++) + ".csv");
        std::ofstream out(path, std::ios::binary);
        out << text;
    }
    ~TempBallots() { std::error_code ec; fs::remove(path, ec); }
    static inline int counter = 0;
};

}  // namespace

TEST_CASE("golden text outputs on the alaska fixture") {
    check_golden("tabulate --method irv " + alaska(), "tabulate_irv.txt");
    check_golden("tabulate --method plurality " + alaska(), "tabulate_plurality.txt");
    check_golden("tabulate --method condorcet " + alaska(), "tabulate_condorcet.txt");
    check_golden("pairwise " + alaska(), "pairwise.txt");
    check_golden("check --criterion core --from irv " + alaska(), "check_core_from_irv.txt");
    check_golden("check --criterion broad --ranking \"Begich>Peltola>Palin\" " + alaska(),
                 "check_broad_condorcet.txt");
    check_golden("monotonicity " + alaska(), "monotonicity.txt");
    check_golden("iia --remove Palin " + alaska(), "iia_remove_palin.txt");
    check_golden("compare " + alaska(), "compare.txt");
    check_golden("continuation-rate " + alaska(), "continuation.txt");
}

TEST_CASE("golden json outputs") {
    check_golden("tabulate --method irv --json " + alaska(), "tabulate_irv_json.txt");
    check_golden("compare --json " + alaska(), "compare_json.txt");
    check_golden("scan --trials 50 --ballots 15 --seed 4 --json", "scan_json.txt");
}

TEST_CASE("the compare line flags the alaska disagreement verbatim") {
    RunResult result = run_cli("compare " + alaska());
    CHECK(result.output.find("IRV: Peltola | Condorcet: Begich — DISAGREE") == 0);
}

TEST_CASE("json outputs parse and carry the documented fields") {
    RunResult result = run_cli("monotonicity --json " + alaska());
    CHECK(result.exit_code == 0);
    json doc = json::parse(result.output);
    CHECK(doc.at("witness").at("total_moved") == 5164);
    CHECK(doc.at("witness").at("moves").at(0).at("moved") == 5164);
    CHECK(doc.at("witness").at("new_winner") == "Begich");

    result = run_cli("iia --remove Begich --json " + alaska());
    CHECK(json::parse(result.output).at("flips").empty());

    result = run_cli("continuation-rate --json " + alaska());
    json rates = json::parse(result.output).at("rates");
    CHECK(rates.at(0).at("percent") == "79.02");
}

TEST_CASE("identical invocations produce byte-identical output") {
    RunResult a = run_cli("tabulate --method irv --json " + alaska());
    RunResult b = run_cli("tabulate --method irv --json " + alaska());
    CHECK(a.output == b.output);
    RunResult c = run_cli("scan --trials 20 --json");
    RunResult d = run_cli("scan --trials 20 --json");
    CHECK(c.output == d.output);
}

TEST_CASE("usage and file errors exit 2") {
    CHECK(run_cli("tabulate --method irv /nonexistent.csv", true).exit_code == 2);
    CHECK(run_cli("tabulate " + alaska(), true).exit_code == 2);      // missing --method
    CHECK(run_cli("bogus-subcommand", true).exit_code == 2);
    CHECK(run_cli("", true).exit_code == 2);
    CHECK(run_cli("check --criterion core " + alaska(), true).exit_code == 2);  // no ranking
    CHECK(run_cli("check --criterion core --from irv --ranking \"Begich>Palin>Peltola\" " +
                      alaska(),
                  true)
              .exit_code == 2);  // both sources
    CHECK(run_cli("iia --remove Nobody " + alaska(), true).exit_code == 2);
    CHECK(run_cli("continuation-rate --candidate Nobody " + alaska(), true).exit_code == 2);
    CHECK(run_cli("check --criterion core --ranking \"Begich>Palin\" " + alaska(), true)
              .exit_code == 2);  // not a permutation

    TempBallots malformed("1,A\nbogus\n");
    RunResult result = run_cli("tabulate --method irv " + malformed.path.string(), true);
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("line 2") != std::string::npos);  // message names the line
}

TEST_CASE("analysis failure values exit 3") {
    TempBallots tied("1,A\n1,B\n");
    CHECK(run_cli("tabulate --method irv " + tied.path.string(), true).exit_code == 3);
    CHECK(run_cli("tabulate --method plurality " + tied.path.string(), true).exit_code == 3);

    TempBallots cyclic("1,A>B>C\n1,B>C>A\n1,C>A>B\n");
    RunResult condorcet =
        run_cli("tabulate --method condorcet " + cyclic.path.string());
    CHECK(condorcet.exit_code == 3);
    CHECK(condorcet.output.find("Smith set: A, B, C") != std::string::npos);
    CHECK(run_cli("check --criterion broad --from condorcet " + cyclic.path.string(), true)
              .exit_code == 3);

    // compare treats the cycle as a reportable value, not an error.
    RunResult compare = run_cli("compare " + cyclic.path.string(), true);
    CHECK(compare.exit_code == 3);  // cyclic profile also ties IRV round 1

    TempBallots decisive_cycle("5,A>B>C\n4,B>C>A\n3,C>A>B\n");
    RunResult compare2 = run_cli("compare " + decisive_cycle.path.string());
    CHECK(compare2.exit_code == 0);
    CHECK(compare2.output.find("INCOMPARABLE") != std::string::npos);

    TempBallots no_first("#candidates: A,B\n2,A\n");
    CHECK(run_cli("continuation-rate --candidate B " + no_first.path.string(), true)
              .exit_code == 3);
}

TEST_CASE("tiebreak policy flag changes the outcome") {
    TempBallots three("2,A\n2,B\n3,C\n");
    CHECK(run_cli("tabulate --method irv " + three.path.string(), true).exit_code == 3);
    RunResult broken =
        run_cli("tabulate --method irv --tiebreak lowest-id " + three.path.string());
    CHECK(broken.exit_code == 0);
    CHECK(broken.output.find("tie broken by lowest id") != std::string::npos);
    CHECK(broken.output.find("IRV social ranking: C > B > A") != std::string::npos);
}

TEST_CASE("help and version exit cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("--version").exit_code == 0);
    CHECK(run_cli("tabulate --help").exit_code == 0);
}
