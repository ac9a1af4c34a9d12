/* C interface to the nrslab exact verification engine. */

#ifndef NRSLAB_H
#define NRSLAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes for every fallible entry point.
 */
typedef enum NrslabStatus {
  NRSLAB_STATUS_OK = 0,
  NRSLAB_STATUS_NULL_ARGUMENT = 1,
  NRSLAB_STATUS_INVALID_UTF8 = 2,
  NRSLAB_STATUS_PARSE_ERROR = 3,
  NRSLAB_STATUS_DOMAIN_ERROR = 4,
} NrslabStatus;

/**
 * Opaque handle over an exact input polynomial.
 */
typedef struct NrslabPoly NrslabPoly;

/**
 * Outcome of one NRS(2) iteration run.
 */
typedef struct NrslabIterResult {
  /**
   * 0 converged, 1 diverged, 2 hit the step limit, 3 singular Jacobian.
   */
  int32_t status;
  uint64_t steps;
  double limit_re0;
  double limit_im0;
  double limit_re1;
  double limit_im1;
  /**
   * Root indices i < j with z_i + z_j matching the limit, or -1.
   */
  int64_t matched_i;
  int64_t matched_j;
} NrslabIterResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a polynomial from its JSON form into a new handle.
 */
enum NrslabStatus nrslab_poly_from_json(const char *json, struct NrslabPoly **out);

/**
 * Degree of the polynomial, or -1 for a null handle.
 */
int32_t nrslab_poly_degree(const struct NrslabPoly *poly);

/**
 * Serializes the polynomial back to its JSON form.
 */
enum NrslabStatus nrslab_poly_to_json(const struct NrslabPoly *poly, char **out);

/**
 * Releases a polynomial handle. Null is a no-op.
 */
void nrslab_poly_free(struct NrslabPoly *poly);

/**
 * Releases a string returned by this library. Null is a no-op.
 */
void nrslab_string_free(char *s);

/**
 * Certifies every attractor point of NRS(m): each candidate built from an
 * m-subset of roots satisfies all fixed-point relations exactly.
 */
enum NrslabStatus nrslab_certify_attractors(const struct NrslabPoly *poly,
                                            uintptr_t m,
                                            bool *out_pass);

/**
 * Checks the Jacobian determinant factorization for every m-subset of roots:
 * det equals the product of pairwise root differences across the split, via
 * both the matrix route and the closed form.
 */
enum NrslabStatus nrslab_check_jacobian(const struct NrslabPoly *poly, uintptr_t m, bool *out_pass);

/**
 * Builds the elimination polynomial g(x0) whose roots are the pairwise root
 * sums, returned as JSON `{"degree": D, "coeffs": ["p/q", ...]}` with
 * coefficients in ascending order.
 */
enum NrslabStatus nrslab_g_poly_json(const struct NrslabPoly *poly, char **out);

/**
 * Runs NRS(2) from a complex start point until the step norm drops below
 * `tol` or `maxiter` steps elapse, then classifies the limit against the
 * pairwise root sums.
 */
enum NrslabStatus nrslab_nrs2_iterate(const struct NrslabPoly *poly,
                                      double start_re0,
                                      double start_im0,
                                      double start_re1,
                                      double start_im1,
                                      double tol,
                                      uint64_t maxiter,
                                      struct NrslabIterResult *out);

/**
 * Runs a named verification suite with the given seed and returns the full
 * JSON report. Suites: identities, attractors, jacobian, gpoly, graphs,
 * newton-series, nrs2, all.
 */
enum NrslabStatus nrslab_run_suite(const char *suite, uint64_t seed, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* NRSLAB_H */
