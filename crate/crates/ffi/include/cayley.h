#ifndef CAYLEY_H
#define CAYLEY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CayleyStatus {
  CayleyStatus_Ok = 0,
  CayleyStatus_NullPointer = 1,
  CayleyStatus_InvalidUtf8 = 2,
  CayleyStatus_Syntax = 3,
  CayleyStatus_DimensionMismatch = 4,
  CayleyStatus_InvalidArgument = 5,
  CayleyStatus_BudgetExceeded = 6,
  CayleyStatus_MalformedMatroid = 7,
  CayleyStatus_Evaluation = 8,
  CayleyStatus_Internal = 9,
} CayleyStatus;

/**
 * Exterior algebra element with rational coefficients.
 */
typedef struct CayleyExterior CayleyExterior;

typedef struct CayleyMatroid CayleyMatroid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; valid until the next
 * failing call.
 */
const char *cayley_last_error(void);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` must come from this library or be null.
 */
void cayley_string_free(char *s);

/**
 * Evaluates an expression in the standard space and writes its canonical
 * printout to `out` (free with `cayley_string_free`).
 *
 * # Safety
 * `expr` must be a valid C string and `out` a valid pointer.
 */
enum CayleyStatus cayley_eval(const char *expr, uintptr_t dim, char **out);

/**
 * Straightens a bitableau or letterplace expression into standard
 * bitableaux; `budget` 0 selects the default.
 *
 * # Safety
 * `expr` must be a valid C string and `out` a valid pointer.
 */
enum CayleyStatus cayley_straighten(const char *expr, uint64_t budget, char **out);

/**
 * Builds a vector from `dim` rational coordinates given as strings
 * ("3", "-1/2").
 *
 * # Safety
 * `coords` must point to `dim` valid C strings; `out` must be valid.
 */
enum CayleyStatus cayley_vector_new(const char *const *coords,
                                    uintptr_t dim,
                                    struct CayleyExterior **out);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum CayleyStatus cayley_wedge(const struct CayleyExterior *a,
                               const struct CayleyExterior *b,
                               struct CayleyExterior **out);

/**
 * Meet with respect to the standard integral e₁ ∧ ⋯ ∧ eₙ.
 *
 * # Safety
 * `a`, `b` must be live handles and `out` a valid pointer.
 */
enum CayleyStatus cayley_meet(const struct CayleyExterior *a,
                              const struct CayleyExterior *b,
                              struct CayleyExterior **out);

/**
 * Hodge star of the standard basis.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum CayleyStatus cayley_hodge(const struct CayleyExterior *a, struct CayleyExterior **out);

/**
 * Canonical printout of an exterior element.
 *
 * # Safety
 * `a` must be a live handle and `out` a valid pointer.
 */
enum CayleyStatus cayley_exterior_to_string(const struct CayleyExterior *a, char **out);

/**
 * # Safety
 * `a` must come from this library or be null; it must not be used again.
 */
void cayley_exterior_free(struct CayleyExterior *a);

/**
 * Parses a matroid document such as `{"kind":"uniform","n":4,"k":2}`.
 *
 * # Safety
 * `json` must be a valid C string and `out` a valid pointer.
 */
enum CayleyStatus cayley_matroid_from_json(const char *json, struct CayleyMatroid **out);

/**
 * Rank of the set of letters in `letters` (e.g. "abc").
 *
 * # Safety
 * `m` must be a live handle, `letters` a valid C string, `out` valid.
 */
enum CayleyStatus cayley_matroid_rank(const struct CayleyMatroid *m,
                                      const char *letters,
                                      uintptr_t *out);

/**
 * Whether the exchange relation for independent words u, v holds in the
 * Whitney algebra (normal form and brute-force ideal membership).
 *
 * # Safety
 * `m` must be a live handle, `u`, `v` valid C strings, `holds` valid.
 */
enum CayleyStatus cayley_exchange_check(const struct CayleyMatroid *m,
                                        const char *u,
                                        const char *v,
                                        bool *holds);

/**
 * # Safety
 * `m` must come from this library or be null; it must not be used again.
 */
void cayley_matroid_free(struct CayleyMatroid *m);

/**
 * Runs a named identity suite and writes the number of failed checks.
 *
 * # Safety
 * `suite` must be a valid C string and `failed` a valid pointer.
 */
enum CayleyStatus cayley_verify(const char *suite, uint64_t seed, uintptr_t *failed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CAYLEY_H */
