#include "profile.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <unordered_map>

namespace rcv {

namespace {

// Per-line ballot multiplicity cap; keeps later percentage arithmetic and
// grand totals comfortably inside 64 bits.
constexpr long long kMaxGroupCount = 1'000'000'000'000LL;
constexpr long long kMaxTotalBallots = 1'000'000'000'000'000LL;

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r";
    auto begin = s.find_first_not_of(ws);
    if (begin == std::string_view::npos) return {};
    auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    return name.find_first_of(">,\n\r") == std::string_view::npos;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

}  // namespace

BallotProfile::BallotProfile(std::vector<std::string> roster_names,
                             std::vector<BallotGroup> groups) {
    if (roster_names.empty()) throw std::invalid_argument("empty roster");

    roster_.reserve(roster_names.size());
    std::unordered_map<std::string_view, int> by_name;
    for (auto& raw : roster_names) {
        std::string name{trim(raw)};
        if (!valid_name(name))
            throw std::invalid_argument("invalid candidate name '" + name + "'");
        int id = static_cast<int>(roster_.size());
        roster_.push_back(Candidate{id, std::move(name)});
        if (!by_name.emplace(roster_.back().name, id).second)
            throw std::invalid_argument("duplicate candidate name '" + roster_.back().name + "'");
    }

    const int n = candidate_count();
    std::map<Ranking, size_t> slot_of;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (auto& g : groups) {
        if (g.count <= 0) throw std::invalid_argument("ballot count must be positive");
        if (g.count > kMaxGroupCount) throw std::invalid_argument("ballot count too large");
        std::fill(seen.begin(), seen.end(), 0);
        for (int id : g.ranking) {
            if (id < 0 || id >= n) throw std::invalid_argument("candidate id out of range");
            if (seen[static_cast<size_t>(id)])
                throw std::invalid_argument("duplicate candidate '" + roster_[id].name +
                                            "' in ranking");
            seen[static_cast<size_t>(id)] = 1;
        }
        auto [it, inserted] = slot_of.emplace(g.ranking, groups_.size());
        if (inserted) {
            groups_.push_back(std::move(g));
        } else {
            groups_[it->second].count += g.count;
        }
        total_ += g.count;
        if (total_ > kMaxTotalBallots) throw std::invalid_argument("total ballot count too large");
    }
}

BallotProfile BallotProfile::parse(std::string_view text) {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> by_name;
    bool explicit_roster = false;
    std::vector<BallotGroup> groups;

    auto intern = [&](std::string_view raw, int line) -> int {
        std::string name{raw};
        if (auto it = by_name.find(name); it != by_name.end()) return it->second;
        if (explicit_roster) throw ParseError(line, "unknown candidate '" + name + "'");
        if (!valid_name(name)) throw ParseError(line, "invalid candidate name '" + name + "'");
        int id = static_cast<int>(names.size());
        names.push_back(name);
        by_name.emplace(std::move(name), id);
        return id;
    };

    int line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        auto nl = text.find('\n', start);
        size_t end = (nl == std::string_view::npos) ? text.size() : nl;
        std::string_view line = trim(text.substr(start, end - start));
        ++line_no;
        start = end + 1;

        if (line.empty()) continue;

        if (line.front() == '#') {
            std::string_view body = trim(line.substr(1));
            if (body.starts_with("candidates:")) {
                if (explicit_roster) throw ParseError(line_no, "duplicate candidates header");
                if (!groups.empty())
                    throw ParseError(line_no, "candidates header must precede ballot lines");
                std::string_view list = trim(body.substr(std::string_view("candidates:").size()));
                if (list.empty()) throw ParseError(line_no, "empty roster");
                for (auto piece : split(list, ',')) {
                    auto name = trim(piece);
                    if (!valid_name(name))
                        throw ParseError(line_no,
                                         "invalid candidate name '" + std::string(name) + "'");
                    if (by_name.count(std::string(name)))
                        throw ParseError(line_no,
                                         "duplicate candidate name '" + std::string(name) + "'");
                    int id = static_cast<int>(names.size());
                    names.emplace_back(name);
                    by_name.emplace(names.back(), id);
                }
                explicit_roster = true;
            }
            continue;
        }

        auto comma = line.find(',');
        if (comma == std::string_view::npos)
            throw ParseError(line_no, "expected 'COUNT,RANKING'");

        std::string_view count_text = trim(line.substr(0, comma));
        long long count = 0;
        auto [ptr, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(),
                                         count);
        if (ec != std::errc{} || ptr != count_text.data() + count_text.size())
            throw ParseError(line_no, "invalid ballot count '" + std::string(count_text) + "'");
        if (count <= 0) throw ParseError(line_no, "ballot count must be positive");
        if (count > kMaxGroupCount) throw ParseError(line_no, "ballot count too large");

        Ranking ranking;
        std::string_view ranking_text = trim(line.substr(comma + 1));
        if (!ranking_text.empty()) {
            for (auto piece : split(ranking_text, '>')) {
                auto name = trim(piece);
                if (name.empty()) throw ParseError(line_no, "empty candidate name in ranking");
                int id = intern(name, line_no);
                if (std::find(ranking.begin(), ranking.end(), id) != ranking.end())
                    throw ParseError(line_no,
                                     "duplicate candidate '" + std::string(name) + "' in ranking");
                ranking.push_back(id);
            }
        }
        groups.push_back(BallotGroup{std::move(ranking), count});
    }

    if (names.empty()) throw ParseError(0, "empty roster");
    try {
        return BallotProfile(std::move(names), std::move(groups));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

const std::string& BallotProfile::name_of(int id) const {
    if (id < 0 || id >= candidate_count()) throw std::invalid_argument("candidate id out of range");
    return roster_[static_cast<size_t>(id)].name;
}

std::optional<int> BallotProfile::id_of(std::string_view name) const noexcept {
    for (const auto& c : roster_)
        if (c.name == name) return c.id;
    return std::nullopt;
}

std::vector<int> BallotProfile::all_ids() const {
    std::vector<int> ids(static_cast<size_t>(candidate_count()));
    for (int i = 0; i < candidate_count(); ++i) ids[static_cast<size_t>(i)] = i;
    return ids;
}

std::vector<std::string> BallotProfile::names() const {
    std::vector<std::string> out;
    out.reserve(roster_.size());
    for (const auto& c : roster_) out.push_back(c.name);
    return out;
}

BallotProfile BallotProfile::restrict_to(const std::vector<int>& keep) const {
    if (keep.empty()) throw std::invalid_argument("keep set is empty");
    std::vector<char> kept(static_cast<size_t>(candidate_count()), 0);
    for (int id : keep) {
        if (id < 0 || id >= candidate_count())
            throw std::invalid_argument("keep set contains unknown candidate id");
        kept[static_cast<size_t>(id)] = 1;
    }

    std::vector<std::string> new_names;
    std::vector<int> new_id(static_cast<size_t>(candidate_count()), -1);
    for (int id = 0; id < candidate_count(); ++id) {
        if (!kept[static_cast<size_t>(id)]) continue;
        new_id[static_cast<size_t>(id)] = static_cast<int>(new_names.size());
        new_names.push_back(roster_[static_cast<size_t>(id)].name);
    }

    std::vector<BallotGroup> new_groups;
    new_groups.reserve(groups_.size());
    for (const auto& g : groups_) {
        Ranking r;
        for (int id : g.ranking)
            if (kept[static_cast<size_t>(id)]) r.push_back(new_id[static_cast<size_t>(id)]);
        new_groups.push_back(BallotGroup{std::move(r), g.count});
    }
    return BallotProfile(std::move(new_names), std::move(new_groups));
}

std::string BallotProfile::serialize() const {
    std::string out = "#candidates: ";
    for (size_t i = 0; i < roster_.size(); ++i) {
        if (i) out += ',';
        out += roster_[i].name;
    }
    out += '\n';
    for (const auto& g : groups_) {
        out += std::to_string(g.count);
        out += ',';
        for (size_t i = 0; i < g.ranking.size(); ++i) {
            if (i) out += '>';
            out += roster_[static_cast<size_t>(g.ranking[i])].name;
        }
        out += '\n';
    }
    return out;
}

Rational continuation_rate(const BallotProfile& profile, int candidate) {
    if (candidate < 0 || candidate >= profile.candidate_count())
        throw std::invalid_argument("candidate id out of range");
    long long first = 0;
    long long continuing = 0;
    for (const auto& g : profile.groups()) {
        if (g.ranking.empty() || g.ranking.front() != candidate) continue;
        first += g.count;
        if (g.ranking.size() >= 2) continuing += g.count;
    }
    if (first == 0)
        throw std::domain_error("candidate '" + profile.name_of(candidate) +
                                "' has no first-preference ballots");
    return Rational{continuing, first};
}

std::string percent_two_decimals(Rational r) {
    if (r.den <= 0 || r.num < 0) throw std::invalid_argument("rate must be non-negative");
    using u128 = unsigned __int128;
    u128 scaled = static_cast<u128>(r.num) * 10000u + static_cast<u128>(r.den) / 2u;
    auto basis_points = static_cast<long long>(scaled / static_cast<u128>(r.den));
    std::string out = std::to_string(basis_points / 100);
    out += '.';
    out += static_cast<char>('0' + (basis_points / 10) % 10);
    out += static_cast<char>('0' + basis_points % 10);
    return out;
}

}  // namespace rcv
