/* pdl — propositional logics of dependence and independence.
 *
 * C interface to the pdl shared library.  All objects are opaque handles
 * owned by the caller and released with the matching *_free function.
 * Every fallible call returns a pdl_status; on failure a thread-local
 * message is available through pdl_last_error().  Strings returned
 * through char** are heap-allocated and released with pdl_string_free().
 */

#ifndef PDL_H
#define PDL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pdl_status {
  PDL_OK = 0,
  PDL_ERR_SYNTAX = 1,      /* parse error (see pdl_last_error for offset) */
  PDL_ERR_FRAGMENT = 2,    /* formula outside the requested fragment */
  PDL_ERR_GUARD = 3,       /* enumeration/size guard exceeded */
  PDL_ERR_IO = 4,          /* file missing or malformed */
  PDL_ERR_ARG = 5,         /* precondition violated */
  PDL_ERR_UNSUPPORTED = 6, /* no translation path / unsupported pairing */
  PDL_ERR_INTERNAL = 7
} pdl_status;

typedef enum pdl_fragment {
  PDL_FRAG_PL_NNF = 0,
  PDL_FRAG_TEAM_D = 1,
  PDL_FRAG_TEAM_I = 2,
  PDL_FRAG_LC = 3,
  PDL_FRAG_LD = 4,
  PDL_FRAG_LD_REL = 5,
  PDL_FRAG_LI = 6,
  PDL_FRAG_LU = 7
} pdl_fragment;

typedef enum pdl_split_strategy {
  PDL_SPLIT_GENERAL = 0,  /* covers may overlap: 3^|T| splits */
  PDL_SPLIT_PARTITION = 1 /* disjoint covers, D fragment only */
} pdl_split_strategy;

typedef struct pdl_formula pdl_formula;
typedef struct pdl_model pdl_model;
typedef struct pdl_derivation pdl_derivation;

/* Version string of the library. */
const char* pdl_version(void);

/* Message describing the most recent failure on this thread. */
const char* pdl_last_error(void);

void pdl_string_free(char* s);
void pdl_formula_free(pdl_formula* f);
void pdl_model_free(pdl_model* m);
void pdl_derivation_free(pdl_derivation* d);

/* ── formulas ─────────────────────────────────────────────────────── */

pdl_status pdl_parse(const char* text, pdl_fragment frag, pdl_formula** out);
pdl_status pdl_print(const pdl_formula* f, char** out);
/* PDL_OK when the formula lies in the fragment; PDL_ERR_FRAGMENT (with a
 * violation listing in pdl_last_error) otherwise. */
pdl_status pdl_validate_fragment(const pdl_formula* f, pdl_fragment frag);
/* Space-separated sorted symbol list. */
pdl_status pdl_props_of(const pdl_formula* f, char** out);
pdl_status pdl_formula_size(const pdl_formula* f, long long* out);
int pdl_formula_equal(const pdl_formula* a, const pdl_formula* b);
pdl_status pdl_bot_substitute(const pdl_formula* f, int max_premises, pdl_formula** out);

/* ── models ───────────────────────────────────────────────────────── */

pdl_status pdl_model_parse(const char* text, pdl_model** out);
pdl_status pdl_model_read(const char* path, pdl_model** out);
pdl_status pdl_model_write(const pdl_model* m, char** out);
pdl_status pdl_model_world_count(const pdl_model* m, size_t* out);
pdl_status pdl_full_model(const char* symbols /* space separated */, pdl_model** out);

/* ── evaluation ───────────────────────────────────────────────────── */

pdl_status pdl_eval_team(const pdl_model* m, const pdl_formula* f, pdl_fragment frag,
                         pdl_split_strategy strategy, int* out);
pdl_status pdl_eval_kripke(const pdl_model* m, size_t world, const pdl_formula* f,
                           pdl_fragment frag, int* out);
pdl_status pdl_eval_global(const pdl_model* m, const pdl_formula* f, pdl_fragment frag,
                           int* out);

/* ── decision procedures ──────────────────────────────────────────── */
/* verdict: 1 for valid / satisfiable / equivalent, else 0.  On a negative
 * verdict with a witness, *witness (and *witness_world when the procedure
 * is pointed; SIZE_MAX otherwise) receive the countermodel; pass NULL to
 * skip it.  jobs > 1 parallelises the model scan. */

pdl_status pdl_validity(const pdl_formula* f, pdl_fragment frag, int jobs, int* verdict,
                        pdl_model** witness, size_t* witness_world);
pdl_status pdl_satisfiable(const pdl_formula* f, pdl_fragment frag, int jobs, int* verdict,
                           pdl_model** witness, size_t* witness_world);
pdl_status pdl_equivalent(const pdl_formula* a, const pdl_formula* b, pdl_fragment frag,
                          int jobs, int* verdict, pdl_model** witness,
                          size_t* witness_world);
pdl_status pdl_team_validity(const pdl_formula* f, pdl_fragment frag, int jobs,
                             int* verdict, pdl_model** witness);
pdl_status pdl_team_satisfiable(const pdl_formula* f, pdl_fragment frag, int jobs,
                                int* verdict, pdl_model** witness);
pdl_status pdl_team_equivalent(const pdl_formula* a, const pdl_formula* b,
                               pdl_fragment frag, int jobs, int* verdict,
                               pdl_model** witness);
pdl_status pdl_team_vs_kripke(const pdl_formula* team_f, pdl_fragment team_frag,
                              const pdl_formula* kripke_f, pdl_fragment kripke_frag,
                              int jobs, int* verdict, pdl_model** witness);

/* ── separation utilities ─────────────────────────────────────────── */

/* closed = 1 when no counterexample exists over the formula's symbols;
 * otherwise the witness team and subteam are returned. */
pdl_status pdl_downward_closure_scan(const pdl_formula* f, int* closed,
                                     pdl_model** team, pdl_model** subteam);
pdl_status pdl_transfer_check(const pdl_formula* f, int* holds);
/* found = 1 and *match set when an equivalent source formula exists within
 * the budget. */
pdl_status pdl_inexpressibility_scan(const pdl_formula* target,
                                     const char* source_fragment,
                                     const char* symbols, int max_size, int* found,
                                     pdl_formula** match);
pdl_status pdl_flatness_check(const pdl_formula* f, const char* symbols, int* flat);

/* ── translations and constructions ───────────────────────────────── */

/* from/to: "d", "i", "ld", "li", "lc", "lu", "ld-rel". */
pdl_status pdl_translate(const pdl_formula* f, const char* from, const char* to,
                         pdl_formula** out);
pdl_status pdl_characteristic_formula(const pdl_model* m, const char* symbols,
                                      pdl_formula** out);
pdl_status pdl_defining_formula(const pdl_model* const* models, size_t count,
                                const char* symbols, pdl_formula** out);

/* ── derivations ──────────────────────────────────────────────────── */

pdl_status pdl_derivation_parse(const char* text, pdl_derivation** out);
pdl_status pdl_derivation_read(const char* path, pdl_derivation** out);
/* ok = 1 when every line checks; otherwise 0 with the failing line number
 * and reason in *error_line / pdl_last_error. */
pdl_status pdl_check_derivation(const pdl_derivation* d, int* ok, int* error_line);
pdl_status pdl_soundness_audit(const pdl_derivation* d, int* ok, int* error_line);
pdl_status pdl_derivation_theorem(const pdl_derivation* d, pdl_formula** out);

#ifdef __cplusplus
}
#endif

#endif /* PDL_H */
