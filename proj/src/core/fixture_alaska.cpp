#include "oracle.hpp"

namespace rcv {

// 2022 Alaska special congressional election, ballot groups as compiled by
// Graham-Squire & McCune (arXiv:2209.04764). Kept byte-identical to
// data/alaska2022.csv; tests enforce the equality.
const std::string& alaska2022_fixture_text() {
    static const std::string text =
        "# 2022 Alaska special congressional election (US House)\n"
        "# Ballot groups as compiled by Graham-Squire & McCune, arXiv:2209.04764\n"
        "#candidates: Begich,Palin,Peltola\n"
        "27053,Begich>Palin>Peltola\n"
        "15467,Begich>Peltola>Palin\n"
        "11290,Begich\n"
        "34049,Palin>Begich>Peltola\n"
        "3652,Palin>Peltola>Begich\n"
        "21272,Palin\n"
        "47407,Peltola>Begich>Palin\n"
        "4645,Peltola>Palin>Begich\n"
        "23747,Peltola\n";
    return text;
}

BallotProfile alaska2022_profile() { return BallotProfile::parse(alaska2022_fixture_text()); }

}  // namespace rcv
