/*
 * hpdesign - exact constructions and verification of moment-curve subspace
 * designs over finite fields.
 *
 * C interface to the shared library. All functions return a status code
 * (HPD_OK on success); outputs are heap strings released with
 * hpd_string_free. hpd_last_error() carries the detail message of the most
 * recent failure on the calling thread.
 */

#ifndef HPDESIGN_H
#define HPDESIGN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define HPD_OK 0
#define HPD_ERR_NON_PRIME_CHARACTERISTIC 1
#define HPD_ERR_REDUCIBLE_MODULUS 2
#define HPD_ERR_DIVISION_BY_ZERO 3
#define HPD_ERR_FIELD_MISMATCH 4
#define HPD_ERR_ZERO_ELEMENT 5
#define HPD_ERR_AMBIENT_MISMATCH 6
#define HPD_ERR_SHAPE_MISMATCH 7
#define HPD_ERR_ZERO_RANK_SUBSPACE 8
#define HPD_ERR_RANK_OUT_OF_RANGE 9
#define HPD_ERR_NON_POLYNOMIAL_SCHEME 10
#define HPD_ERR_INVALID_SCHEME 11
#define HPD_ERR_ZERO_POLYNOMIAL 12
#define HPD_ERR_UNEQUAL_INDEX_SUMS 13
#define HPD_ERR_IDENTICAL_TUPLES 14
#define HPD_ERR_BUDGET_EXCEEDED 15
#define HPD_ERR_HYPOTHESIS_VIOLATED 16
#define HPD_ERR_BASE_CASE_BUDGET_EXCEEDED 17
#define HPD_ERR_PARAMETER_OUT_OF_RANGE 18
#define HPD_ERR_LENGTH_MISMATCH 19
#define HPD_ERR_MONOTONICITY_VIOLATION 20
#define HPD_ERR_ZERO_DETERMINANT 21
#define HPD_ERR_PARSE 22
#define HPD_ERR_INTERNAL 23
#define HPD_ERR_OUT_OF_MEMORY 24

typedef struct hpd_field hpd_field;
typedef struct hpd_enum hpd_enum;

const char* hpd_version(void);
const char* hpd_status_name(int status);
/* Thread-local message describing the most recent error. */
const char* hpd_last_error(void);
void hpd_string_free(char* s);

/*
 * Fields. spec is "p", "p^h" or "p^h:modulus=c0,c1,...,1" (constant term
 * first, monic). Info is a JSON object with p, h, q, modulus, spec.
 */
int hpd_field_open(const char* spec, hpd_field** out);
void hpd_field_close(hpd_field* f);
int hpd_field_info(const hpd_field* f, char** json_out);

/*
 * Designs travel as JSON:
 *   {"field":"5","m":4,"r":2,"s":2,"family":"secant","omega":2,
 *    "members":[{"t":0,"basis":[[...]],"pluecker":{"0,1":1,...}},...]}
 * family/omega/t/pluecker are optional; bare member lists verify fine.
 *
 * construct: family is "tangent", "diverted" or "secant"; omega is the
 * canonical element code as a decimal string, or NULL to scan for the first
 * viable one (tangent ignores it).
 */
int hpd_design_construct(const char* family, int r, int s, const char* field_spec,
                         const char* omega, char** design_json_out);

/* Lists every omega code whose coefficient table is entirely nonzero. */
int hpd_design_explore_omega(const char* family, int r, int s, const char* field_spec,
                             char** json_out);

/* Orthogonal complements of all members (an involution). */
int hpd_design_dual(const char* design_json, char** design_json_out);

/*
 * Measures the design. subset optionally restricts to comma-separated member
 * indices ("0,2,4"). mode is "exhaustive" or "sampled:N[:SEED]" (seed
 * defaults to the seed argument). budget caps exhaustive scans; threads
 * sizes the worker pool (<= 0 means hardware parallelism).
 * verdict_out (may be NULL) is 0 iff an hp check was requested and failed.
 */
int hpd_design_verify(const char* design_json, const char* subset, int check_weak,
                      int check_strong, int check_hp, const char* mode, uint64_t budget,
                      int threads, uint64_t seed, char** report_json_out, int* verdict_out);

/* Re-derives every certificate embedded in a report; ok_out = 1 if all hold. */
int hpd_report_recheck(const char* report_json, int* ok_out);

/*
 * Lower bounds for generator sets of k-subspaces in PG(d, F):
 * {"finite_bound":...,"closed_field_bound":...}. q is a decimal field size,
 * or NULL/"inf" for an infinite field.
 */
int hpd_bounds(int d, int k, const char* q, char** json_out);

/* Which size/characteristic conditions guarantee strong (s, r*s) designs. */
int hpd_conditions(int r, int s, const char* field_spec, char** json_out);

/* Number of rank-r subspaces of F_q^m as a decimal string (exact). */
int hpd_count_subspaces(const char* field_spec, int m, int r, char** count_out);

/*
 * Streaming enumeration of all rank-r subspaces, deterministic order. Each
 * hpd_enum_next yields one subspace in the text format
 *   "m=<ambient> q=<fieldspec>\n<row>\n...<row>\n"
 * and sets *text_out = NULL at the end of the stream.
 */
int hpd_enum_open(const char* field_spec, int m, int r, hpd_enum** out);
int hpd_enum_next(hpd_enum* it, char** text_out);
void hpd_enum_close(hpd_enum* it);

#ifdef __cplusplus
}
#endif

#endif /* HPDESIGN_H */
