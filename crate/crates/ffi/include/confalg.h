#ifndef CONFALG_H
#define CONFALG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result codes.
 */
typedef enum CfaStatus {
  CFA_STATUS_OK = 0,
  CFA_STATUS_NULL_POINTER = 1,
  CFA_STATUS_INVALID_UTF8 = 2,
  CFA_STATUS_PARSE_ERROR = 3,
  CFA_STATUS_UNKNOWN_BUILTIN = 4,
  CFA_STATUS_INVALID_ARGUMENT = 5,
  /*
   A computation failed for a mathematical reason (e.g. not free).
   */
  CFA_STATUS_UNSUPPORTED = 6,
  CFA_STATUS_PANIC = 7,
} CfaStatus;

/*
 Opaque conformal superalgebra.
 */
typedef struct CfaAlgebra CfaAlgebra;

/*
 Opaque conformal module.
 */
typedef struct CfaModule CfaModule;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread; valid until the next
 failing call. Never null.
 */
const char *cfa_last_error(void);

/*
 Releases a string returned by this library.

 # Safety
 `s` must come from this library or be null.
 */
void cfa_string_free(char *s);

/*
 Built-in algebra such as `vir`, `current-sl2`, `w2`, `ck6`.

 # Safety
 `name` must be a NUL-terminated string, `out` a valid pointer.
 */
enum CfaStatus cfa_algebra_builtin(const char *name, struct CfaAlgebra **out);

/*
 Parses the first `algebra` block of `src`.

 # Safety
 `src` must be a NUL-terminated string, `out` a valid pointer.
 */
enum CfaStatus cfa_algebra_parse(const char *src, struct CfaAlgebra **out);

/*
 # Safety
 `a` must come from this library or be null; it is invalid afterwards.
 */
void cfa_algebra_free(struct CfaAlgebra *a);

/*
 Number of generators.

 # Safety
 `a` and `out` must be valid.
 */
enum CfaStatus cfa_algebra_rank(const struct CfaAlgebra *a, size_t *out);

/*
 Number of axiom violations (0 means the axioms hold).

 # Safety
 `a` and `violations` must be valid.
 */
enum CfaStatus cfa_algebra_check(const struct CfaAlgebra *a, size_t *violations);

/*
 Product table as canonical JSON.

 # Safety
 `a` and `out` must be valid; free the result with `cfa_string_free`.
 */
enum CfaStatus cfa_algebra_table_json(const struct CfaAlgebra *a, char **out);

/*
 Product table in the text format accepted by `cfa_algebra_parse`.

 # Safety
 `a` and `out` must be valid; free the result with `cfa_string_free`.
 */
enum CfaStatus cfa_algebra_emit(const struct CfaAlgebra *a, char **out);

/*
 Solvability: `*out` is 1 (yes), 0 (no) or -1 (undecided at `depth`;
 pass 0 for the default depth).

 # Safety
 `a` and `out` must be valid.
 */
enum CfaStatus cfa_algebra_is_solvable(const struct CfaAlgebra *a, size_t depth, int32_t *out);

/*
 Nilpotency, with the same encoding as `cfa_algebra_is_solvable`.

 # Safety
 `a` and `out` must be valid.
 */
enum CfaStatus cfa_algebra_is_nilpotent(const struct CfaAlgebra *a, size_t depth, int32_t *out);

/*
 Dimension of the second cohomology within the given bounds.

 # Safety
 `a` and `dim` must be valid.
 */
enum CfaStatus cfa_algebra_h2(const struct CfaAlgebra *a,
                              size_t n_bound,
                              size_t f_degree_bound,
                              size_t *dim);

/*
 Mode-level Jacobi check in the window `[lo, hi]`.

 # Safety
 `a` and `violations` must be valid.
 */
enum CfaStatus cfa_algebra_modes_check(const struct CfaAlgebra *a,
                                       int64_t lo,
                                       int64_t hi,
                                       size_t *violations);

/*
 Built-in module such as `mad:1/2:2` or `ext-torsion:0:1`.

 # Safety
 `spec` must be a NUL-terminated string, `out` a valid pointer.
 */
enum CfaStatus cfa_module_builtin(const char *spec, struct CfaModule **out);

/*
 Parses the first `module` block of `src`; `over` may be null, otherwise
 it is tried when resolving the block's algebra name.

 # Safety
 `src` must be a NUL-terminated string, `over` valid or null, `out` valid.
 */
enum CfaStatus cfa_module_parse(const char *src,
                                const struct CfaAlgebra *over,
                                struct CfaModule **out);

/*
 # Safety
 `m` must come from this library or be null; it is invalid afterwards.
 */
void cfa_module_free(struct CfaModule *m);

/*
 Number of module axiom violations.

 # Safety
 `m` and `violations` must be valid.
 */
enum CfaStatus cfa_module_check(const struct CfaModule *m, size_t *violations);

/*
 Irreducibility of a free rank-1 module: `*out` is 1 or 0.

 # Safety
 `m` and `out` must be valid.
 */
enum CfaStatus cfa_module_is_irreducible(const struct CfaModule *m, int32_t *out);

/*
 Whether the module maps faithfully and homomorphically into `gc_N`:
 `*out` is 1 or 0.

 # Safety
 `m` and `out` must be valid.
 */
enum CfaStatus cfa_module_faithful_gc(const struct CfaModule *m, int32_t *out);

/*
 Module table as canonical JSON.

 # Safety
 `m` and `out` must be valid; free the result with `cfa_string_free`.
 */
enum CfaStatus cfa_module_table_json(const struct CfaModule *m, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONFALG_H */
