/*
 * rcv — ranked-ballot election analysis engine.
 *
 * C interface to the tabulation core: parse ranked ballots into an immutable
 * profile, compute plurality / instant-runoff / Condorcet results, check the
 * core-support and broad-support majority-rule criteria against any proposed
 * social ranking, and search for monotonicity and IIA failures.
 *
 * Conventions:
 *   - Functions returning rcv_status yield RCV_OK on success. On failure,
 *     rcv_last_error() describes the problem; the message is thread-local
 *     and valid until the next failing call on the same thread.
 *   - Composite results are returned as UTF-8 JSON documents (schemas in
 *     docs/formats.md). Free them with rcv_string_free().
 *   - Candidate ids are dense 0..n-1 indexes into the profile roster, in
 *     roster order.
 *   - A profile is immutable once created; it may be shared freely across
 *     threads. Handles must be released with rcv_profile_free().
 */
#ifndef RCV_H
#define RCV_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(RCV_BUILD)
#    define RCV_API __declspec(dllexport)
#  else
#    define RCV_API __declspec(dllimport)
#  endif
#else
#  define RCV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rcv_status {
    RCV_OK = 0,
    RCV_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad id, bad flag value, precondition */
    RCV_ERR_PARSE = 2,            /* malformed ballot text; message names the line */
    RCV_ERR_TIE = 3,              /* tally tie under the error-on-tie policy */
    RCV_ERR_UNDEFINED = 4,        /* result undefined, e.g. rate with a zero denominator */
    RCV_ERR_NOMEM = 5,
    RCV_ERR_UNKNOWN = 6
} rcv_status;

typedef enum rcv_tiebreak {
    RCV_TIEBREAK_ERROR = 0,     /* raise RCV_ERR_TIE on any tally tie */
    RCV_TIEBREAK_LOWEST_ID = 1  /* eliminate the lowest tied id; a two-way tie in the
                                   final IRV round still errors */
} rcv_tiebreak;

typedef enum rcv_method {
    RCV_METHOD_PLURALITY = 0,
    RCV_METHOD_IRV = 1,
    RCV_METHOD_CONDORCET = 2
} rcv_method;

typedef enum rcv_criterion {
    RCV_CRITERION_CORE = 0,  /* pair elections over core-support ballots */
    RCV_CRITERION_BROAD = 1  /* pair elections over all ballots (Condorcet condition) */
} rcv_criterion;

/* Flag bits for rcv_monotonicity. At least one direction is required.
 * RCV_SEARCH_EXHAUSTIVE also enumerates combined moves across groups; it is
 * guarded to small profiles (at most 8 eligible groups and 24 movable
 * ballots per direction). */
#define RCV_DIRECTION_PROMOTE 1
#define RCV_DIRECTION_DEMOTE 2
#define RCV_SEARCH_EXHAUSTIVE 4

typedef struct rcv_profile rcv_profile;

RCV_API const char* rcv_version(void);

/* Message for the most recent failure on this thread; never NULL. */
RCV_API const char* rcv_last_error(void);

RCV_API void rcv_string_free(char* s);

/*
 * Ballot profiles
 *
 * The ballot file format (docs/formats.md): an optional roster header
 * "#candidates: NameA,NameB,..." followed by one line per ballot group,
 * "COUNT,Name1>Name2>..." where the ranking may be empty. Duplicate rankings
 * are merged with summed counts; names are interned in first-appearance
 * order when no header is present.
 */
RCV_API rcv_status rcv_profile_parse(const char* text, rcv_profile** out);
RCV_API void rcv_profile_free(rcv_profile* profile);

RCV_API int rcv_profile_candidate_count(const rcv_profile* profile);
/* NULL when the id is out of range; otherwise valid for the profile's lifetime. */
RCV_API const char* rcv_profile_candidate_name(const rcv_profile* profile, int id);
/* -1 when no candidate carries the (exact, trimmed) name. */
RCV_API int rcv_profile_candidate_id(const rcv_profile* profile, const char* name);
RCV_API long long rcv_profile_total_ballots(const rcv_profile* profile);
RCV_API int rcv_profile_group_count(const rcv_profile* profile);

/* Canonical ballot-file text; parsing it back reproduces the profile. */
RCV_API rcv_status rcv_profile_serialize(const rcv_profile* profile, char** out_text);

/* Keeps only the listed candidates; survivor order on each ballot is
 * preserved, emptied ballots remain as abstentions, ids are re-indexed
 * densely in roster order. */
RCV_API rcv_status rcv_profile_restrict(const rcv_profile* profile, const int* keep,
                                        int keep_len, rcv_profile** out);

/* Of the ballots ranking `candidate` first, how many rank anyone second.
 * Fails with RCV_ERR_UNDEFINED when the candidate has no first-preference
 * ballots. */
RCV_API rcv_status rcv_continuation_rate(const rcv_profile* profile, int candidate,
                                         long long* continuing, long long* first_preferences);

/* Parses "Name1>Name2>..." against the roster into out_ids (distinct, known
 * names; at most `capacity` entries). Returns the count through out_len. */
RCV_API rcv_status rcv_parse_ranking(const rcv_profile* profile, const char* text, int* out_ids,
                                     int capacity, int* out_len);

/*
 * Tabulation
 *
 * Results are JSON documents. Plurality/IRV ties surface as RCV_ERR_TIE
 * under RCV_TIEBREAK_ERROR. A Condorcet cycle is a value, not an error: the
 * document carries "ranking": null and a cycle report with the Smith set.
 */
RCV_API rcv_status rcv_tabulate(const rcv_profile* profile, rcv_method method,
                                rcv_tiebreak tiebreak, char** out_json);

/* Full-ballot pair-election matrix. */
RCV_API rcv_status rcv_pairwise(const rcv_profile* profile, char** out_json);

/*
 * Criteria
 *
 * `ranking` must be a permutation of the roster (length == candidate count).
 * The report carries one pair tally and verdict per unordered pair, plus the
 * overall verdict (pass only when every pair holds by strict majority).
 */
RCV_API rcv_status rcv_check(const rcv_profile* profile, rcv_criterion criterion,
                             const int* ranking, int ranking_len, char** out_json);

/* Minimal ballot manipulation (by total moved ballots) that flips the IRV
 * outcome, or witness:null. `flags` combines RCV_DIRECTION_* and
 * RCV_SEARCH_EXHAUSTIVE bits. */
RCV_API rcv_status rcv_monotonicity(const rcv_profile* profile, rcv_tiebreak tiebreak,
                                    int flags, char** out_json);

/* Re-runs IRV without `removed` and reports every surviving pair whose
 * relative order flips. Requires three or more candidates. */
RCV_API rcv_status rcv_iia(const rcv_profile* profile, int removed, rcv_tiebreak tiebreak,
                           char** out_json);

/*
 * Profile generation and scanning
 *
 * `kind` is one of "impartial-culture", "truncated-impartial-culture", or
 * "fixture" (the bundled 2022 Alaska special election). Identical parameters
 * reproduce identical profiles; the generator is specified in
 * docs/formats.md for cross-language reproducibility.
 */
RCV_API rcv_status rcv_generate_profile(const char* kind, int candidates, long long ballots,
                                        uint64_t seed, rcv_profile** out);

/* Runs `trials` generated profiles (trial t uses seed + t) and reports
 * IRV/Condorcet agreement, cycle/tie counts, monotonicity witnesses, and the
 * 3-candidate disagreement-pattern check, as one JSON summary. */
RCV_API rcv_status rcv_agreement_scan(const char* kind, int candidates, long long ballots,
                                      uint64_t seed, long long trials, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* RCV_H */
