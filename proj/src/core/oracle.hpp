#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "criteria.hpp"

namespace rcv {

enum class ProfileKind { ImpartialCulture, TruncatedImpartialCulture, Fixture };

/// Deterministic profile source: identical parameters always reproduce an
/// identical profile. ImpartialCulture draws each ballot as a uniform full
/// permutation; the truncated variant then cuts it to a uniform length in
/// 0..n. Fixture ignores candidates/ballots/seed and yields the bundled
/// Alaska 2022 data. The draw order and generator are pinned in
/// docs/formats.md so ports can reproduce streams bit-for-bit.
struct ProfileGenerator {
    ProfileKind kind = ProfileKind::ImpartialCulture;
    int candidates = 3;
    long long ballots = 25;
    uint64_t seed = 0;

    bool operator==(const ProfileGenerator&) const = default;
};

/// splitmix64 (Steele, Lea & Flood's SplittableRandom finalizer).
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// next() % bound; the slight modulo bias is irrelevant here and keeps
    /// the stream trivially portable.
    uint64_t next_below(uint64_t bound) { return next() % bound; }

private:
    uint64_t state_;
};

/// The bundled 2022 Alaska special congressional election ballot groups,
/// byte-identical to data/alaska2022.csv.
const std::string& alaska2022_fixture_text();
BallotProfile alaska2022_profile();

BallotProfile generate_profile(const ProfileGenerator& generator);

/// Every permutation of 0..n-1, lexicographic. Guards n <= 8.
std::vector<SocialRanking> all_rankings(int n);

/// Brute-force route to the IRV outcome: the subset of all rankings that
/// pass check_core_support with a strict majority in every pair. Checks each
/// permutation against the ballots directly, independently of the
/// elimination tabulation.
std::vector<SocialRanking> rankings_passing_core_support(const BallotProfile& profile);

struct GeneralResultCheck {
    long long checked = 0;
    long long counterexamples = 0;
    std::optional<std::string> first_counterexample;  // serialized profile

    bool operator==(const GeneralResultCheck&) const = default;
};

struct ScanSummary {
    ProfileGenerator generator;
    long long trials = 0;
    long long agree = 0;      // IRV and Condorcet winners match
    long long disagree = 0;
    long long cycles = 0;     // no transitive Condorcet order
    long long ties = 0;       // IRV aborted on a tie
    long long witnesses = 0;  // promote-direction monotonicity failures
    GeneralResultCheck general;

    bool operator==(const ScanSummary&) const = default;
};

/// Runs `trials` generated profiles (trial t uses seed generator.seed + t)
/// and tallies IRV/Condorcet agreement, cycles, ties, and monotonicity
/// witnesses. On 3-candidate profiles where both methods are decisive and
/// their winners differ, also verifies the expected disagreement pattern
/// (Condorcet winner last in IRV, IRV winner second in the Condorcet order)
/// and records the first counterexample, if any, rather than assuming it.
ScanSummary agreement_scan(const ProfileGenerator& generator, long long trials);

}  // namespace rcv
