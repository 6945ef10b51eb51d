/*
 * primcomp — exact invariants of primitive compactifications of the plane.
 *
 * C interface to the shared library. All functions that can fail return a
 * primcomp_status and report details through the optional `err` out-parameter
 * (a malloc'd NUL-terminated string, to be released with
 * primcomp_string_free; it is set to NULL on success). Every returned string
 * (JSON, DOT, rendered text) is likewise malloc'd and owned by the caller.
 *
 * Sequences are opaque handles created by primcomp_sequence_parse and
 * released with primcomp_sequence_free.
 */
#ifndef PRIMCOMP_H
#define PRIMCOMP_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum primcomp_status {
  PRIMCOMP_OK = 0,
  PRIMCOMP_ERR_PARSE = 1,            /* malformed textual input */
  PRIMCOMP_ERR_INVALID_SEQUENCE = 2, /* entries fail sequence validation */
  PRIMCOMP_ERR_PRECONDITION = 3,     /* documented precondition not met */
  PRIMCOMP_ERR_BAD_ARGUMENT = 4,     /* argument outside the documented domain */
  PRIMCOMP_ERR_LIMIT = 5,            /* configurable resource bound exceeded */
  PRIMCOMP_ERR_INTERNAL = 6          /* library invariant violated (a bug) */
} primcomp_status;

typedef struct primcomp_sequence primcomp_sequence;

/* Library version as "major.minor.patch". The pointer is static; do not
 * free it. */
const char* primcomp_version(void);

/* Releases any string returned through an out-parameter. NULL is allowed. */
void primcomp_string_free(char* text);

/* Parses "3,2,5", "(3,2,5)" or whitespace-separated entries, validates them
 * and returns an owned handle. */
primcomp_status primcomp_sequence_parse(const char* text,
                                        primcomp_sequence** out, char** err);

void primcomp_sequence_free(primcomp_sequence* seq);

/* Canonical "(3,2,5)" rendering of the sequence. */
primcomp_status primcomp_sequence_format(const primcomp_sequence* seq,
                                         char** out, char** err);

/* Parses and validates `text`, returning a JSON report. Returns PRIMCOMP_OK
 * with {"valid": false, "error": {...}} for well-formed input that fails
 * validation; only unparseable text yields PRIMCOMP_ERR_PARSE. */
primcomp_status primcomp_validate_report(const char* text, char** json_out,
                                         char** err);

/* Invariants (degrees, weight data, expansions, equations, automorphisms,
 * moduli) as JSON; fields whose preconditions fail are null. */
primcomp_status primcomp_analyze(const primcomp_sequence* seq, char** json_out,
                                 char** err);

/* Newton pairs, schematic dual graph, singularity trichotomy, family-table
 * match and catalogue report as JSON. Requires a primitive normal-form
 * sequence. */
primcomp_status primcomp_classification(const primcomp_sequence* seq,
                                        char** json_out, char** err);

/* The canonical one-parameter action. `lambda` is a rational literal such as
 * "2" or "-3/4", or NULL to keep the parameter symbolic. The _render variant
 * returns the action as text, the _json variant a full JSON description.
 * Requires a sequence admitting the action. */
primcomp_status primcomp_action_render(const primcomp_sequence* seq,
                                       const char* lambda, char** text_out,
                                       char** err);
primcomp_status primcomp_action_json(const primcomp_sequence* seq,
                                     const char* lambda, char** json_out,
                                     char** err);

/* Exact verification of the identity and composition axioms for the
 * sequence's action (symbolic parameter). With inject_fault != 0 a term that
 * breaks composition is added first, exercising the failure path. */
primcomp_status primcomp_action_verify(const primcomp_sequence* seq,
                                       int inject_fault, char** json_out,
                                       char** err);

/* Same verification for the fully symbolic degree-m family (no sequence). */
primcomp_status primcomp_action_verify_generic(int m, int inject_fault,
                                               char** json_out, char** err);

/* Newton pairs, schematic and derivable pole bounds as JSON, or the
 * schematic as Graphviz DOT when as_dot != 0. Requires a primitive
 * normal-form sequence. */
primcomp_status primcomp_resolve_schematic(const primcomp_sequence* seq,
                                           int as_dot, char** out, char** err);

/* Blow-up data for a coprime pair written "p/q" with p > q >= 1: continued
 * fraction, weighted graph, curvette table and fraction comparisons as JSON,
 * or the graph as Graphviz DOT when as_dot != 0. */
primcomp_status primcomp_monomial_resolution(const char* fraction, int as_dot,
                                             char** out, char** err);

/* Whether two comma-separated lists of non-zero rationals give isomorphic
 * models of the sequence. *verdict receives 1 or 0. */
primcomp_status primcomp_theta_equivalent(const primcomp_sequence* seq,
                                          const char* thetas1,
                                          const char* thetas2, int* verdict,
                                          char** err);

/* Exhaustive enumeration. `options_json` accepts
 *   {"max_entry": N, "max_omega0": N, "min_omega0": N, "max_len": N,
 *    "require_algebraic": bool, "require_normal_form": bool}
 * (max_omega0 defaults to max_entry; min_omega0 defaults to 1, and together
 * with max_omega0 bands the first entry so runs can be sharded). The
 * callback receives one JSON record per sequence and returns non-zero to
 * stop early; it may be NULL to count only. A JSON summary is returned
 * through summary_json_out when non-NULL. */
typedef int (*primcomp_enumerate_callback)(const char* record_json,
                                           void* user_data);

primcomp_status primcomp_enumerate(const char* options_json,
                                   primcomp_enumerate_callback callback,
                                   void* user_data, char** summary_json_out,
                                   char** err);

#ifdef __cplusplus
}
#endif

#endif /* PRIMCOMP_H */
