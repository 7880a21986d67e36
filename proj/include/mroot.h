#ifndef MROOT_H
#define MROOT_H

/* C interface to the mroot library: locating and certifying multiple
 * (singular) roots of polynomial systems.
 *
 * All computational results are returned as JSON strings allocated by the
 * library; release them with mroot_string_free. Functions return MROOT_OK on
 * success; on failure mroot_last_error() describes the problem for the
 * calling thread. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mroot_system mroot_system;

typedef enum {
    MROOT_OK = 0,
    MROOT_ERR_PARSE = 1,   /* malformed system/matrix/point text */
    MROOT_ERR_INVALID = 2, /* bad argument (dimension, range, flag) */
    MROOT_ERR_NUMERIC = 3, /* singular Jacobian, failed extraction, ... */
    MROOT_ERR_BUDGET = 4   /* series order budget exhausted; retry with 2p */
} mroot_status;

const char* mroot_version(void);

/* Message for the most recent failure on this thread. Never NULL. */
const char* mroot_last_error(void);

void mroot_string_free(char* s);

/* System text: "vars: x y" header line followed by "name = expr" lines. */
mroot_status mroot_system_parse(const char* text, mroot_system** out);
void mroot_system_free(mroot_system* sys);
int mroot_system_nvars(const mroot_system* sys);
int mroot_system_size(const mroot_system* sys);

/* eps-free numerical rank of a dense complex matrix (rows of whitespace-
 * separated a+bi entries). rank_out may be NULL. */
mroot_status mroot_rank(const char* matrix_text, char** json_out, int* rank_out);

/* Deflation sequence at a point ("re,im..." components as re or re+imi).
 * completed_out (may be NULL) is 1 iff the trace status is completed. */
mroot_status mroot_deflate(const mroot_system* sys, const char* point, double radius,
                           int order, int max_depth, char** json_out, int* completed_out);

/* Newton iteration on the deflated system. redeflate != 0 rebuilds the
 * deflation at every iterate instead of freezing it at the start point. */
mroot_status mroot_newton(const mroot_system* sys, const char* point, double radius,
                          int order, int max_depth, int max_iters, double tol,
                          int redeflate, char** json_out, int* converged_out);

/* Deflate at the point, then certify the extracted system on the ball of
 * radius cert_radius centered at the point. at_root != 0 emits the
 * quadratic-convergence (gamma) certificate instead of the existence/
 * uniqueness (alpha) certificate. */
mroot_status mroot_certify(const mroot_system* sys, const char* point, double radius,
                           int order, int max_depth, double cert_radius, int at_root,
                           char** json_out, int* verdict_out);

/* Local multiplicity of the system at a root. */
mroot_status mroot_multiplicity(const mroot_system* sys, const char* point, int cap,
                                char** json_out, int* mu_out);

#ifdef __cplusplus
}
#endif

#endif
