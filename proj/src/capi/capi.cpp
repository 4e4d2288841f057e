#include "rcv.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/json_io.hpp"
#include "core/oracle.hpp"

struct rcv_profile {
    rcv::BallotProfile impl;
};

namespace {

thread_local std::string g_last_error = "no error";

void set_error(const std::string& message) { g_last_error = message; }

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
rcv_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        return RCV_OK;
    } catch (const rcv::ParseError& e) {
        set_error(e.what());
        return RCV_ERR_PARSE;
    } catch (const rcv::TieError& e) {
        set_error(e.what());
        return RCV_ERR_TIE;
    } catch (const std::domain_error& e) {
        set_error(e.what());
        return RCV_ERR_UNDEFINED;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return RCV_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        set_error("out of memory");
        return RCV_ERR_NOMEM;
    } catch (const std::exception& e) {
        set_error(e.what());
        return RCV_ERR_UNKNOWN;
    } catch (...) {
        set_error("unknown error");
        return RCV_ERR_UNKNOWN;
    }
}

void require(bool condition, const char* message) {
    if (!condition) throw std::invalid_argument(message);
}

rcv::TiebreakPolicy to_policy(rcv_tiebreak tiebreak) {
    switch (tiebreak) {
        case RCV_TIEBREAK_ERROR: return rcv::TiebreakPolicy::ErrorOnTie;
        case RCV_TIEBREAK_LOWEST_ID: return rcv::TiebreakPolicy::LowestIdEliminated;
    }
    throw std::invalid_argument("invalid tiebreak value");
}

char* json_string(const rcv::Json& j) { return dup_string(j.dump(2)); }

}  // namespace

extern "C" {

const char* rcv_version(void) { return "0.1.0"; }

const char* rcv_last_error(void) { return g_last_error.c_str(); }

void rcv_string_free(char* s) { std::free(s); }

rcv_status rcv_profile_parse(const char* text, rcv_profile** out) {
    return guarded([&] {
        require(text && out, "null argument");
        *out = new rcv_profile{rcv::BallotProfile::parse(text)};
    });
}

void rcv_profile_free(rcv_profile* profile) { delete profile; }

int rcv_profile_candidate_count(const rcv_profile* profile) {
    return profile ? profile->impl.candidate_count() : 0;
}

const char* rcv_profile_candidate_name(const rcv_profile* profile, int id) {
    if (!profile || id < 0 || id >= profile->impl.candidate_count()) return nullptr;
    return profile->impl.name_of(id).c_str();
}

int rcv_profile_candidate_id(const rcv_profile* profile, const char* name) {
    if (!profile || !name) return -1;
    return profile->impl.id_of(name).value_or(-1);
}

long long rcv_profile_total_ballots(const rcv_profile* profile) {
    return profile ? profile->impl.total_ballots() : 0;
}

int rcv_profile_group_count(const rcv_profile* profile) {
    return profile ? static_cast<int>(profile->impl.groups().size()) : 0;
}

rcv_status rcv_profile_serialize(const rcv_profile* profile, char** out_text) {
    return guarded([&] {
        require(profile && out_text, "null argument");
        *out_text = dup_string(profile->impl.serialize());
    });
}

rcv_status rcv_profile_restrict(const rcv_profile* profile, const int* keep, int keep_len,
                                rcv_profile** out) {
    return guarded([&] {
        require(profile && keep && out && keep_len > 0, "null or empty argument");
        std::vector<int> ids(keep, keep + keep_len);
        *out = new rcv_profile{profile->impl.restrict_to(ids)};
    });
}

rcv_status rcv_continuation_rate(const rcv_profile* profile, int candidate, long long* continuing,
                                 long long* first_preferences) {
    return guarded([&] {
        require(profile && continuing && first_preferences, "null argument");
        rcv::Rational rate = rcv::continuation_rate(profile->impl, candidate);
        *continuing = rate.num;
        *first_preferences = rate.den;
    });
}

rcv_status rcv_parse_ranking(const rcv_profile* profile, const char* text, int* out_ids,
                             int capacity, int* out_len) {
    return guarded([&] {
        require(profile && text && out_ids && out_len, "null argument");
        std::string_view view(text);
        std::vector<int> ids;
        size_t start = 0;
        while (start <= view.size()) {
            auto gt = view.find('>', start);
            size_t end = gt == std::string_view::npos ? view.size() : gt;
            std::string_view raw = view.substr(start, end - start);
            auto first = raw.find_first_not_of(" \t");
            if (first == std::string_view::npos)
                throw std::invalid_argument("empty candidate name in ranking");
            auto last = raw.find_last_not_of(" \t");
            std::string name(raw.substr(first, last - first + 1));
            auto id = profile->impl.id_of(name);
            if (!id) throw std::invalid_argument("unknown candidate '" + name + "'");
            for (int existing : ids)
                if (existing == *id)
                    throw std::invalid_argument("duplicate candidate '" + name + "' in ranking");
            ids.push_back(*id);
            if (gt == std::string_view::npos) break;
            start = gt + 1;
        }
        require(static_cast<int>(ids.size()) <= capacity, "ranking buffer too small");
        for (size_t i = 0; i < ids.size(); ++i) out_ids[i] = ids[i];
        *out_len = static_cast<int>(ids.size());
    });
}

rcv_status rcv_tabulate(const rcv_profile* profile, rcv_method method, rcv_tiebreak tiebreak,
                        char** out_json) {
    return guarded([&] {
        require(profile && out_json, "null argument");
        const rcv::BallotProfile& p = profile->impl;
        switch (method) {
            case RCV_METHOD_PLURALITY: {
                rcv::SocialRanking ranking = rcv::plurality_ranking(p, to_policy(tiebreak));
                rcv::TallySet fp = rcv::first_preferences(p, p.all_ids());
                *out_json = json_string(rcv::plurality_to_json(p, ranking, fp));
                return;
            }
            case RCV_METHOD_IRV: {
                rcv::IrvResult result = rcv::irv_ranking(p, to_policy(tiebreak));
                *out_json = json_string(rcv::irv_result_to_json(p, result));
                return;
            }
            case RCV_METHOD_CONDORCET: {
                rcv::CondorcetOutcome outcome = rcv::condorcet_outcome(rcv::pairwise_matrix(p));
                *out_json = json_string(rcv::condorcet_to_json(p, outcome));
                return;
            }
        }
        throw std::invalid_argument("invalid method value");
    });
}

rcv_status rcv_pairwise(const rcv_profile* profile, char** out_json) {
    return guarded([&] {
        require(profile && out_json, "null argument");
        *out_json =
            json_string(rcv::pairwise_to_json(profile->impl, rcv::pairwise_matrix(profile->impl)));
    });
}

rcv_status rcv_check(const rcv_profile* profile, rcv_criterion criterion, const int* ranking,
                     int ranking_len, char** out_json) {
    return guarded([&] {
        require(profile && ranking && out_json, "null argument");
        require(ranking_len >= 0, "negative ranking length");
        std::vector<int> ids(ranking, ranking + ranking_len);
        rcv::CriterionReport report =
            criterion == RCV_CRITERION_CORE ? rcv::check_core_support(profile->impl, ids)
                                            : rcv::check_broad_support(profile->impl, ids);
        *out_json = json_string(rcv::criterion_report_to_json(profile->impl, report));
    });
}

rcv_status rcv_monotonicity(const rcv_profile* profile, rcv_tiebreak tiebreak, int flags,
                            char** out_json) {
    return guarded([&] {
        require(profile && out_json, "null argument");
        require(flags >= 1 && flags <= 7, "invalid search flags");
        require((flags & (RCV_DIRECTION_PROMOTE | RCV_DIRECTION_DEMOTE)) != 0,
                "at least one search direction is required");
        rcv::MonotonicityOptions options{(flags & RCV_DIRECTION_PROMOTE) != 0,
                                         (flags & RCV_DIRECTION_DEMOTE) != 0,
                                         (flags & RCV_SEARCH_EXHAUSTIVE) != 0};
        auto witness =
            rcv::find_monotonicity_violation(profile->impl, to_policy(tiebreak), options);
        *out_json = json_string(
            rcv::monotonicity_to_json(profile->impl, to_policy(tiebreak), options, witness));
    });
}

rcv_status rcv_iia(const rcv_profile* profile, int removed, rcv_tiebreak tiebreak,
                   char** out_json) {
    return guarded([&] {
        require(profile && out_json, "null argument");
        rcv::IiaReport report = rcv::iia_flip_report(profile->impl, removed, to_policy(tiebreak));
        *out_json = json_string(rcv::iia_to_json(profile->impl, report));
    });
}

rcv_status rcv_generate_profile(const char* kind, int candidates, long long ballots,
                                uint64_t seed, rcv_profile** out) {
    return guarded([&] {
        require(kind && out, "null argument");
        rcv::ProfileGenerator generator{rcv::profile_kind_from_name(kind), candidates, ballots,
                                        seed};
        *out = new rcv_profile{rcv::generate_profile(generator)};
    });
}

rcv_status rcv_agreement_scan(const char* kind, int candidates, long long ballots, uint64_t seed,
                              long long trials, char** out_json) {
    return guarded([&] {
        require(kind && out_json, "null argument");
        rcv::ProfileGenerator generator{rcv::profile_kind_from_name(kind), candidates, ballots,
                                        seed};
        *out_json = json_string(rcv::scan_to_json(rcv::agreement_scan(generator, trials)));
    });
}

}  // extern "C"
