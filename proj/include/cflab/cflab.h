/* Licensed under the Apache License 2.0 (see LICENSE file). */

/* C interface to the cflab library. Objects are opaque handles released with
 * the matching *_free function. Every fallible call returns a cflab_status;
 * on failure the message is available from cflab_last_error() on the same
 * thread until the next failing call. Strings returned through char** are
 * heap allocated and must be released with cflab_string_free(). */

#ifndef CFLAB_CFLAB_H
#define CFLAB_CFLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(CFLAB_BUILDING_LIBRARY)
#define CFLAB_API __attribute__((visibility("default")))
#else
#define CFLAB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cflab_status {
  CFLAB_OK = 0,
  CFLAB_ERR_INVALID_ARGUMENT = 1, /* bad names, letters, lengths, null pointers */
  CFLAB_ERR_PARSE = 2,            /* grammar text, DFA/advice JSON, words */
  CFLAB_ERR_PRECONDITION = 3,     /* call outside the operation's domain */
  CFLAB_ERR_COST_GUARD = 4,       /* desk-scale limit; retry with force */
  CFLAB_ERR_INTERNAL = 5
} cflab_status;

typedef enum cflab_verdict { CFLAB_PASS = 0, CFLAB_FAIL = 1, CFLAB_INCONCLUSIVE = 2 } cflab_verdict;

typedef uint64_t cflab_letter;
typedef struct cflab_grammar cflab_grammar;
typedef struct cflab_dfa cflab_dfa;

CFLAB_API const char* cflab_version(void);
CFLAB_API const char* cflab_last_error(void);
CFLAB_API void cflab_string_free(char* s);

/* Grammars: text format `Head -> B C | 'a' | ()`, or a builtin name
 * (L_eq, Pal_sharp, EvenPal, L2_1, L2_2, AnBn, AmBmCt, APlus). */
CFLAB_API cflab_status cflab_grammar_parse(const char* text, cflab_grammar** out);
CFLAB_API cflab_status cflab_grammar_builtin(const char* name, cflab_grammar** out);
CFLAB_API void cflab_grammar_free(cflab_grammar* g);
CFLAB_API cflab_status cflab_grammar_member(const cflab_grammar* g, const cflab_letter* word, size_t len, int* out);
CFLAB_API cflab_status cflab_grammar_pumping_constant(const cflab_grammar* g, uint64_t* out);
/* JSON array of words (arrays of letters), shortlex ordered. */
CFLAB_API cflab_status cflab_grammar_enumerate(const cflab_grammar* g, size_t max_len, char** out_json);
CFLAB_API cflab_status cflab_grammar_to_text(const cflab_grammar* g, int cnf, char** out_text);

/* DFAs from JSON {states, alphabet, start, accepting, transitions}. */
CFLAB_API cflab_status cflab_dfa_parse(const char* json, cflab_dfa** out);
CFLAB_API void cflab_dfa_free(cflab_dfa* m);
/* Letters outside the alphabet are CFLAB_ERR_INVALID_ARGUMENT. */
CFLAB_API cflab_status cflab_dfa_accepts(const cflab_dfa* m, const cflab_letter* word, size_t len, int* out);

/* Corpus language membership by name (L_eq, L_3eq, Pal_sharp, L2, L2_1,
 * L2_2, L2_prime, L2_dprime, EvenPal). */
CFLAB_API cflab_status cflab_language_member(const char* name, const cflab_letter* word, size_t len, int* out);

/* out must hold len letters; c >= 1. */
CFLAB_API cflab_status cflab_scale(const cflab_letter* word, size_t len, uint64_t c, cflab_letter* out);
/* out must hold 4 * len letters; letters of word in {1, 2}, len >= 1. */
CFLAB_API cflab_status cflab_nest_l2(const cflab_letter* word, size_t len, cflab_letter* out);

/* Runs a CLI-level command (enumerate, member, intersect-check, slice-stats,
 * bound-check, swap-scan, params, advice-check, pump-refute, grammar, suite)
 * with a JSON object of arguments. On CFLAB_OK, *report_json receives
 * {command, inputs, verdict, payload, elapsed_ms} and *verdict its verdict. */
CFLAB_API cflab_status cflab_run(const char* command, const char* args_json, char** report_json,
                                 cflab_verdict* verdict);

#ifdef __cplusplus
}
#endif

#endif /* CFLAB_CFLAB_H */
