#ifndef PHIFORM_H
#define PHIFORM_H

/* C interface to the phiform library.
 *
 * The library computes, for an imaginary quadratic field labeled by a prime
 * q = 3 (mod 4), q > 3: Fourier coefficients of the associated weight-one
 * form, its value at points of the upper half plane, its completed Mellin
 * transform, degrees of special cycles, Arakelov divisors, and the
 * Gross-Zagier singular-moduli identity.
 *
 * Conventions:
 *   - Every function returning pf_status writes its result through the last
 *     `out` pointer and returns PF_OK on success.  On failure `out` is left
 *     untouched unless noted, and pf_last_error() describes the problem.
 *   - Report producers (pf_oracle_json, pf_mellin_json, pf_degz_json,
 *     pf_gz_json, pf_selftest_json) still write their JSON report when they
 *     return PF_ERR_TOLERANCE, so callers can show the failing report.
 *   - Strings returned through `char** out` are heap allocated; release them
 *     with pf_string_free().
 *   - High-precision inputs (heights, spectral parameters) are passed as
 *     decimal strings so no precision is lost crossing the C boundary;
 *     high-precision outputs are emitted the same way inside the JSON.
 *   - JSON payloads are deterministic: fixed key order, fixed digit counts.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pf_status {
  PF_OK = 0,
  PF_ERR_INVALID = 1,     /* invalid argument or out-of-domain input */
  PF_ERR_TOLERANCE = 2,   /* a checked quantity exceeded its tolerance */
  PF_ERR_CONVERGENCE = 3, /* an iteration failed to converge */
  PF_ERR_NOMEM = 4,
  PF_ERR_INTERNAL = 5
} pf_status;

/* Stable lowercase name of a status code ("ok", "invalid", ...). */
const char* pf_status_name(pf_status st);

/* Library version string (semantic versioning). */
const char* pf_version(void);

/* Description of the most recent failure on this thread; empty string if the
 * last call succeeded.  The pointer stays valid until the next library call
 * on the same thread. */
const char* pf_last_error(void);

/* Release a string returned by this library. */
void pf_string_free(char* s);

/* Field handle: the imaginary quadratic field Q(sqrt(-q)) together with its
 * class data and working precision in bits. */
typedef struct pf_field pf_field;

/* q must be a prime with q = 3 (mod 4), q > 3; prec_bits >= 2. */
pf_status pf_field_new(long q, long prec_bits, pf_field** out);
void pf_field_free(pf_field* f);

long pf_field_q(const pf_field* f);
long pf_field_prec(const pf_field* f);
long pf_field_class_number(const pf_field* f);

/* Number of integral ideals of norm n (0 for n <= 0). */
pf_status pf_rho(const pf_field* f, long n, long* out);

/* Fourier coefficient of index n > 0 as a decimal string at field
 * precision. */
pf_status pf_coeff_positive_str(const pf_field* f, long n, char** out);

/* Coefficient table for indices 1..tmax plus the constant term.  When `v` is
 * non-NULL (a positive decimal height) the v-dependent rows are included:
 * indices -1..-tmax and the numeric value of the constant term. */
pf_status pf_coeffs_json(const pf_field* f, long tmax, const char* v,
                         char** out);

/* Value of the form at tau = u + iv (decimal strings, v > 0) from the first
 * nmax coefficients of each sign, with a bound on the dropped tail. */
pf_status pf_eval_json(const pf_field* f, const char* u, const char* v,
                       long nmax, char** out);

/* Direct Fourier extraction of the real-analytic family at spectral
 * parameter s > 1 and height v > 0 against the closed local-factor product,
 * for indices -tmax..tmax.  The lattice cutoff is solved from the truncation
 * bound at `tolerance`.  threads = 0 picks a default; results do not depend
 * on the thread count.  Returns PF_ERR_TOLERANCE (report still written) if
 * any gap exceeds `tolerance`. */
pf_status pf_oracle_json(const pf_field* f, const char* s, const char* v,
                         long tmax, double tolerance, int threads, char** out);

/* Completed Mellin transform at s: closed form vs quadrature of the
 * nmax-truncated expansion.  tolerance > 0 additionally enforces the
 * relative gap (PF_ERR_TOLERANCE on failure, report still written). */
pf_status pf_mellin_json(const pf_field* f, const char* s, long nmax,
                         double tolerance, char** out);

/* Degrees of the special cycles for 1 <= t <= tmax by two independent
 * routes (lattice counts vs closed form), compared exactly as prime-log
 * combinations.  PF_ERR_TOLERANCE if any row disagrees (report written). */
pf_status pf_degz_json(const pf_field* f, long tmax, char** out);

/* Arakelov divisor of index t != 0.  t > 0: finite part over non-split
 * primes with its degree.  t < 0: archimedean part, requires a height v
 * (decimal string). */
pf_status pf_arakelov_json(const pf_field* f, long t, const char* v,
                           char** out);

/* Singular-moduli identity for the auxiliary discriminant -d:
 * gcd(q, d) = 1, -d fundamental, d > 4.  Recomputes the CM product at
 * prec_bits (>= 64 recommended; 0 picks the field precision).  tolerance > 0
 * additionally enforces the identity gap (PF_ERR_TOLERANCE on failure,
 * report still written). */
pf_status pf_gz_json(const pf_field* f, long d, long prec_bits,
                     double tolerance, char** out);

/* Cross-module invariant suite at reduced ranges; quick != 0 shrinks the
 * ranges further.  Needs no field handle.  PF_ERR_TOLERANCE if any check
 * fails (report still written). */
pf_status pf_selftest_json(int quick, char** out);

#ifdef __cplusplus
}
#endif

#endif /* PHIFORM_H */
