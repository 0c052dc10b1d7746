/*
   Copyright 2026 derivkit contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * derivkit C API.
 *
 * Arbitrary-order derivatives of trigonometric/hyperbolic functions and
 * their inverses through closed forms built on Stirling numbers and
 * auxiliary polynomial families, an exact-rational coefficient-table
 * generator, and identity-check suites.
 *
 * Every call that can fail returns dk_status; DK_OK is 0. A non-OK call
 * leaves a diagnostic retrievable with dk_context_last_error(). Strings
 * returned through char** are heap blocks owned by the caller; release them
 * with dk_string_free(). A context is cheap, holds only error state (all
 * internal caches are process-wide and thread-safe), but must not be used
 * from two threads at once.
 */

#ifndef DERIVKIT_DERIVKIT_H
#define DERIVKIT_DERIVKIT_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DK_API __declspec(dllexport)
#else
#define DK_API __attribute__((visibility("default")))
#endif

typedef enum dk_status {
  DK_OK = 0,
  DK_ERROR_USAGE = 1,       /* bad enum, missing parameter, unsupported combo */
  DK_ERROR_DOMAIN = 2,      /* argument outside the mathematical domain */
  DK_ERROR_SINGULAR = 3,    /* evaluation point too close to a pole */
  DK_ERROR_CONSISTENCY = 4, /* complex route failed its residual gate */
  DK_ERROR_INTERNAL = 5
} dk_status;

typedef enum dk_fn {
  DK_FN_ARCTAN = 0,
  DK_FN_LORENTZ = 1,     /* 1/(1+x^2) */
  DK_FN_LORENTZ_POW = 2, /* (1+x^2)^(-nu), needs nu */
  DK_FN_ARCCOS = 3,
  DK_FN_SECH = 4,
  DK_FN_SECH_POW = 5, /* sech^nu, needs nu */
  DK_FN_SEC = 6,
  DK_FN_TAN = 7,
  DK_FN_COT = 8,
  DK_FN_COS_POW = 9 /* cos^j, needs j */
} dk_fn;

typedef enum dk_method {
  DK_METHOD_CLOSED = 0,  /* Stirling / auxiliary-polynomial closed form */
  DK_METHOD_DP = 1,      /* derivative polynomials at tan x */
  DK_METHOD_ORACLE = 2,  /* truncated-Taylor-jet reference */
  DK_METHOD_HOPPE = 3,   /* composite-function expansion (sec only) */
  DK_METHOD_LEIBNIZ = 4, /* product-rule route (tan only) */
  DK_METHOD_LAMBDA = 5,  /* cos^j via Lambda at tan x */
  DK_METHOD_DELTA = 6    /* cos^j via Delta at cos x */
} dk_method;

typedef struct dk_context dk_context;

typedef struct dk_deriv_result {
  double value;
  double residual_im; /* imaginary residual of complex routes; else 0 */
  dk_method method;
} dk_deriv_result;

typedef struct dk_check_summary {
  int cases_run;
  int failures;
  double elapsed_seconds;
} dk_check_summary;

DK_API const char* dk_version(void);
DK_API const char* dk_status_name(dk_status status);

DK_API dk_context* dk_context_new(void);
DK_API void dk_context_free(dk_context* ctx);

/* Message from the most recent failing call on this context; "" if none.
 * The pointer stays valid until the next call on the same context. */
DK_API const char* dk_context_last_error(const dk_context* ctx);

/* m-th derivative of fn at x. nu is read only by the *_POW families and j
 * only by DK_FN_COS_POW; pass 0 otherwise. */
DK_API dk_status dk_deriv(dk_context* ctx, dk_fn fn, dk_method method, int order, double x,
                          double nu, int j, dk_deriv_result* out);

/* Methods available for fn as a bitmask of (1 << dk_method). */
DK_API unsigned dk_methods_for(dk_fn fn);

/* Coefficient table for a family ("stirling2", "touchard", "pnxy", "pnnu",
 * "hermite", "chebyshev", "pi", "q", "lambda", "delta").
 * format is "csv" or "json". nu is an exact literal like "1/2" (may be NULL
 * when unused); j < 0 means "not set". *out is heap-allocated on success. */
DK_API dk_status dk_table(dk_context* ctx, const char* family, int n_max, int j, const char* nu,
                          const char* format, char** out);

/* Identity-check suite ("gf", "oracle", "chebyshev", "bell", "operator",
 * "routes"). n_max <= 0 and tol <= 0 pick the suite defaults. report may be
 * NULL; when given it receives the human-readable report text. A suite that
 * runs but records mismatches still returns DK_OK -- read summary->failures. */
DK_API dk_status dk_check(dk_context* ctx, const char* suite, int n_max, double tol,
                          dk_check_summary* summary, char** report);

DK_API void dk_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DERIVKIT_DERIVKIT_H */
