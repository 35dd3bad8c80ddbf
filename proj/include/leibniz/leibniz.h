#ifndef LEIBNIZ_LEIBNIZ_H
#define LEIBNIZ_LEIBNIZ_H

/*
 * C interface to the Leibniz algebra toolkit.
 *
 * Every function returns an lbz_status. On failure, lbz_last_error() returns a
 * message for the calling thread, valid until that thread's next call.
 * Strings returned through char** are owned by the caller and released with
 * lbz_string_free. Handles are released with their matching *_free function;
 * passing NULL to a free function is a no-op.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LBZ_API __declspec(dllexport)
#else
#define LBZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lbz_status {
  LBZ_OK = 0,
  LBZ_ERR_INPUT = 1,             /* malformed input, bad parameters, bad spec file */
  LBZ_ERR_NOT_LEIBNIZ = 2,       /* tensor violates the right Leibniz identity */
  LBZ_ERR_UNSUPPORTED_FIELD = 3, /* operation needs a finite prime field */
  LBZ_ERR_BUDGET = 4,            /* enumeration would exceed the resource budget */
  LBZ_ERR_NULL_ARGUMENT = 5,
  LBZ_ERR_INTERNAL = 6
} lbz_status;

typedef struct lbz_algebra lbz_algebra;
typedef struct lbz_lattice lbz_lattice;
typedef struct lbz_suite lbz_suite;

typedef struct lbz_budget {
  uint64_t max_vectors;   /* bound on p^n for element scans */
  uint64_t max_pairs;     /* bound on p^(2n) for pairwise element scans */
  uint64_t max_subspaces; /* bound on enumerated subspaces */
  uint64_t max_nodes;     /* bound on the subalgebra lattice size */
} lbz_budget;

typedef struct lbz_identity_verdicts {
  int right_leibniz; /* always 1 for a loaded algebra */
  int left_leibniz;
  int symmetric;
  int lie;
} lbz_identity_verdicts;

typedef struct lbz_lattice_verdicts {
  int modular;
  int upper_semimodular;
  int lower_semimodular;
  int all_wqi;
} lbz_lattice_verdicts;

LBZ_API const char* lbz_version(void);
LBZ_API const char* lbz_last_error(void);
/* For LBZ_ERR_NOT_LEIBNIZ: the violating basis triple of the last error. */
LBZ_API lbz_status lbz_last_violation(size_t triple[3]);
LBZ_API void lbz_string_free(char* s);
LBZ_API void lbz_budget_default(lbz_budget* out);

/* Algebras. p = 0 selects the rationals. */
LBZ_API lbz_status lbz_algebra_from_spec(const char* json, lbz_algebra** out);
LBZ_API lbz_status lbz_algebra_load(const char* path, lbz_algebra** out);
LBZ_API lbz_status lbz_algebra_from_family(const char* family, const long long* params, size_t n_params,
                                           uint32_t p, lbz_algebra** out);
LBZ_API void lbz_algebra_free(lbz_algebra* a);
LBZ_API lbz_status lbz_algebra_dim(const lbz_algebra* a, size_t* out);
/* 0 for the rationals. */
LBZ_API lbz_status lbz_algebra_characteristic(const lbz_algebra* a, uint32_t* out);
LBZ_API lbz_status lbz_algebra_name(const lbz_algebra* a, char** out);
LBZ_API lbz_status lbz_algebra_emit_spec(const lbz_algebra* a, char** out);
LBZ_API lbz_status lbz_algebra_identities(const lbz_algebra* a, lbz_identity_verdicts* out);
/* Prime fields only: out = [x, y], all vectors of length dim with entries below p. */
LBZ_API lbz_status lbz_algebra_bracket(const lbz_algebra* a, const uint32_t* x, const uint32_t* y, uint32_t* out);
/* Structure report; as_json = 0 gives plain text. */
LBZ_API lbz_status lbz_algebra_analyze(const lbz_algebra* a, const lbz_budget* budget, int as_json, char** out);

/* Subalgebra lattices (prime fields only). */
LBZ_API lbz_status lbz_lattice_build(const lbz_algebra* a, const lbz_budget* budget, lbz_lattice** out);
LBZ_API void lbz_lattice_free(lbz_lattice* l);
LBZ_API lbz_status lbz_lattice_size(const lbz_lattice* l, size_t* out);
LBZ_API lbz_status lbz_lattice_edge_count(const lbz_lattice* l, size_t* out);
LBZ_API lbz_status lbz_lattice_verdicts_get(const lbz_lattice* l, lbz_lattice_verdicts* out);
LBZ_API lbz_status lbz_lattice_text(const lbz_lattice* l, char** out);
LBZ_API lbz_status lbz_lattice_json(const lbz_lattice* l, char** out);
LBZ_API lbz_status lbz_lattice_dot(const lbz_lattice* l, char** out);

/* Theorem checks. checks_csv = NULL or "" selects every check. */
LBZ_API lbz_status lbz_check_ids(char** out_csv);
LBZ_API lbz_status lbz_run_check(const lbz_algebra* a, const char* check_id, const lbz_budget* budget,
                                 char** out_json);
LBZ_API lbz_status lbz_suite_run_algebra(const lbz_algebra* a, const char* checks_csv, const lbz_budget* budget,
                                         lbz_suite** out);
LBZ_API lbz_status lbz_suite_run_corpus(uint64_t seed, const char* checks_csv, const lbz_budget* budget,
                                        lbz_suite** out);
LBZ_API void lbz_suite_free(lbz_suite* s);
LBZ_API lbz_status lbz_suite_failures(const lbz_suite* s, size_t* out);
LBZ_API lbz_status lbz_suite_table(const lbz_suite* s, char** out);
/* indent < 0 gives compact JSON. */
LBZ_API lbz_status lbz_suite_json(const lbz_suite* s, int indent, char** out);

/* Catalog. */
LBZ_API lbz_status lbz_catalog_list(char** out_text);
/* "p=3", "3", "F_3", "rational" or "Q"; 0 for the rationals. */
LBZ_API lbz_status lbz_parse_field(const char* spec, uint32_t* out_p);

#ifdef __cplusplus
}
#endif

#endif
