#ifndef RELUCRIT_C_H
#define RELUCRIT_C_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; nonzero values mirror the library's error kinds. */
typedef enum rc_status {
  RC_OK = 0,
  RC_ZERO_VECTOR = 1,
  RC_DOMAIN_ERROR,
  RC_DIMENSION_MISMATCH,
  RC_NOT_IN_FIXED_SPACE,
  RC_NOT_ADMISSIBLE,
  RC_UNSUPPORTED_CHART,
  RC_SIZE_LIMIT,
  RC_NO_CONVERGENCE,
  RC_SINGULAR_JACOBIAN,
  RC_NOT_CONSISTENT,
  RC_SINGULAR_JSTAR,
  RC_INCONSISTENT_SYSTEM,
  RC_UNKNOWN_FAMILY,
  RC_BAD_INPUT,
  RC_IO_ERROR,
  RC_INTERNAL = 99
} rc_status;

typedef struct rc_context rc_context;
typedef struct rc_point rc_point;

rc_status rc_context_create(rc_context** out);
void rc_context_destroy(rc_context* ctx);
/* Message of the last failed call on this context; never NULL. */
const char* rc_last_error(const rc_context* ctx);

/* Replaces the built-in seeds. */
rc_status rc_context_load_seeds(rc_context* ctx, const char* path);
rc_status rc_context_set_newton(rc_context* ctx, int max_iters, double tol_residual, double fd_step, int damping);

/* family: "a" | "i" | "ii" | "m" */
rc_status rc_solve_consistency(rc_context* ctx, const char* family, double k, rc_point** out);
/* method: "jump" | "path"; lam_inc is used by "path" only. */
rc_status rc_solve_critical(rc_context* ctx, const char* family, double k, const char* method, double lam_inc,
                            rc_point** out);

size_t rc_point_dim(const rc_point* p);
/* Copies min(n, dim) coordinates. */
size_t rc_point_coords(const rc_point* p, double* buf, size_t n);
double rc_point_residual(const rc_point* p);
double rc_point_objective(const rc_point* p);
double rc_point_k(const rc_point* p);
/* The point as a one-row CSV record with header. */
const char* rc_point_csv(const rc_point* p);
void rc_point_destroy(rc_point* p);

/* Outputs are malloc'd; release with rc_string_free. */
rc_status rc_table_csv(rc_context* ctx, const char* which, char** out);
rc_status rc_decay_csv(rc_context* ctx, const char* family, double k_min, double k_max, double factor, char** out);
/* only: NULL or "" for every suite. seed_path: NULL for the built-in seeds. */
rc_status rc_verify(rc_context* ctx, const char* only, const char* seed_path, char** ledger, int* all_passed);
void rc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
