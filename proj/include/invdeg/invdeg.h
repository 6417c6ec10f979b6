/*
 * invdeg C API.
 *
 * Every computation is exposed through an opaque handle created by a
 * *_create function and released by the matching *_destroy. Large integers
 * cross the boundary as decimal strings owned by the handle; they stay
 * valid until the handle is destroyed. Functions that fail return a status
 * code and leave a message in invdeg_last_error() (per thread).
 */
#ifndef INVDEG_INVDEG_H
#define INVDEG_INVDEG_H

#include <stddef.h>
#include <stdint.h>

#if defined(INVDEG_BUILDING_LIBRARY)
#define INVDEG_API __attribute__((visibility("default")))
#else
#define INVDEG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum invdeg_status {
    INVDEG_OK = 0,
    INVDEG_ERR_ARGUMENT = 1,     /* input outside the operation's domain */
    INVDEG_ERR_VERIFICATION = 2, /* an exact check came out false */
    INVDEG_ERR_INTERNAL = 3      /* broken invariant, allocation failure */
} invdeg_status;

typedef enum invdeg_verify_mode {
    INVDEG_VERIFY_SYMBOLIC = 0,
    INVDEG_VERIFY_NUMERIC = 1
} invdeg_verify_mode;

INVDEG_API const char* invdeg_last_error(void);
INVDEG_API const char* invdeg_version(void);

/* Strings returned through char** out-parameters are released here. */
INVDEG_API void invdeg_string_free(char* s);

/* ---- psi values ------------------------------------------------------- */

typedef struct invdeg_psi_table invdeg_psi_table;

INVDEG_API invdeg_status invdeg_psi_table_create(int n, invdeg_psi_table** out);
INVDEG_API void invdeg_psi_table_destroy(invdeg_psi_table* table);
INVDEG_API int invdeg_psi_table_n(const invdeg_psi_table* table);
/* psi_i for 1 <= i <= n; NULL when out of range. */
INVDEG_API const char* invdeg_psi_single(const invdeg_psi_table* table, int i);
/* psi_{i,j} for 1 <= i < j <= n; NULL when out of range. */
INVDEG_API const char* invdeg_psi_pair(const invdeg_psi_table* table, int i, int j);
/* psi_alpha for a strictly increasing alpha inside 1..n. */
INVDEG_API invdeg_status invdeg_psi_seq(const invdeg_psi_table* table, const int* entries, size_t length,
                                        char** out);

/* ---- multidegrees ----------------------------------------------------- */

typedef struct invdeg_multidegree invdeg_multidegree;

/* threads == 0 selects the hardware concurrency. */
INVDEG_API invdeg_status invdeg_multidegree_create(int n, unsigned threads, invdeg_multidegree** out);
INVDEG_API void invdeg_multidegree_destroy(invdeg_multidegree* table);
INVDEG_API int invdeg_multidegree_n(const invdeg_multidegree* table);
INVDEG_API long invdeg_multidegree_m(const invdeg_multidegree* table);
/* beta(n, d), 0 <= d <= m. */
INVDEG_API const char* invdeg_multidegree_beta(const invdeg_multidegree* table, long d);
/* deg^{m-1-d,d}(Gamma), 0 <= d <= m-1. */
INVDEG_API const char* invdeg_multidegree_gamma(const invdeg_multidegree* table, long d);
/* Coefficient of t1^(m-d) t2^d in C(Sigma), 1 <= d <= m-1. */
INVDEG_API const char* invdeg_multidegree_sigma(const invdeg_multidegree* table, long d);
/* Coefficient of t1^(m-d) t2^d in (t1 + t2) C(Gamma), 0 <= d <= m. */
INVDEG_API const char* invdeg_multidegree_identity_lhs(const invdeg_multidegree* table, long d);
/* 1 if that coefficient equals the t1^m + t2^m + C(Sigma) side, 0 if not, -1 if d is out of range. */
INVDEG_API int invdeg_multidegree_identity_match(const invdeg_multidegree* table, long d);
INVDEG_API int invdeg_multidegree_identity_ok(const invdeg_multidegree* table);

/* delta(d, n, r), the algebraic degree of semidefinite programming. */
INVDEG_API invdeg_status invdeg_delta(long d, int n, int r, char** out);

/* ---- ML-degrees ------------------------------------------------------- */

INVDEG_API invdeg_status invdeg_ml_degree(int n, long d, unsigned threads, char** out);

typedef struct invdeg_ml_table invdeg_ml_table;

INVDEG_API invdeg_status invdeg_ml_table_create(int n_max, unsigned threads, invdeg_ml_table** out);
INVDEG_API void invdeg_ml_table_destroy(invdeg_ml_table* table);
INVDEG_API int invdeg_ml_table_n_max(const invdeg_ml_table* table);
/* Number of entries in row n, i.e. n(n+1)/2; 0 when n is out of range. */
INVDEG_API long invdeg_ml_table_row_length(const invdeg_ml_table* table, int n);
/* phi(n, d) for 1 <= d <= n(n+1)/2. */
INVDEG_API const char* invdeg_ml_table_value(const invdeg_ml_table* table, int n, long d);

typedef struct invdeg_ml_polynomial invdeg_ml_polynomial;

/* Fails with INVDEG_ERR_VERIFICATION if the fit does not reproduce the extra samples. */
INVDEG_API invdeg_status invdeg_ml_polynomial_create(long d, unsigned threads, invdeg_ml_polynomial** out);
INVDEG_API void invdeg_ml_polynomial_destroy(invdeg_ml_polynomial* poly);
INVDEG_API long invdeg_ml_polynomial_d(const invdeg_ml_polynomial* poly);
INVDEG_API size_t invdeg_ml_polynomial_coeff_count(const invdeg_ml_polynomial* poly);
/* Coefficient of n^k as "p" or "p/q". */
INVDEG_API const char* invdeg_ml_polynomial_coeff(const invdeg_ml_polynomial* poly, size_t k);
INVDEG_API int invdeg_ml_polynomial_sample_first(const invdeg_ml_polynomial* poly);
INVDEG_API int invdeg_ml_polynomial_sample_last(const invdeg_ml_polynomial* poly);
INVDEG_API size_t invdeg_ml_polynomial_validated_count(const invdeg_ml_polynomial* poly);
INVDEG_API int invdeg_ml_polynomial_validated_at(const invdeg_ml_polynomial* poly, size_t k);
INVDEG_API const char* invdeg_ml_polynomial_string(const invdeg_ml_polynomial* poly);

typedef struct invdeg_fd_report invdeg_fd_report;

INVDEG_API invdeg_status invdeg_fd_report_create(long d, int window, unsigned threads, invdeg_fd_report** out);
INVDEG_API void invdeg_fd_report_destroy(invdeg_fd_report* report);
INVDEG_API int invdeg_fd_report_first_n(const invdeg_fd_report* report);
INVDEG_API size_t invdeg_fd_report_value_count(const invdeg_fd_report* report);
INVDEG_API const char* invdeg_fd_report_value(const invdeg_fd_report* report, size_t k);
INVDEG_API size_t invdeg_fd_report_difference_count(const invdeg_fd_report* report);
INVDEG_API const char* invdeg_fd_report_difference(const invdeg_fd_report* report, size_t k);
INVDEG_API int invdeg_fd_report_all_vanish(const invdeg_fd_report* report);

/* ---- verification ----------------------------------------------------- */

typedef struct invdeg_report invdeg_report;

/* Runs the full check list. Failing checks are reported in the handle, not
 * through the status; INVDEG_ERR_ARGUMENT covers bad n/trials or symbolic
 * mode above symbolic_cap. */
INVDEG_API invdeg_status invdeg_verify(int n, invdeg_verify_mode mode, int trials, uint64_t seed, int symbolic_cap,
                                       invdeg_report** out);
INVDEG_API void invdeg_report_destroy(invdeg_report* report);
INVDEG_API size_t invdeg_report_count(const invdeg_report* report);
INVDEG_API const char* invdeg_report_name(const invdeg_report* report, size_t k);
INVDEG_API int invdeg_report_pass(const invdeg_report* report, size_t k);
INVDEG_API const char* invdeg_report_detail(const invdeg_report* report, size_t k);
INVDEG_API int invdeg_report_all_pass(const invdeg_report* report);

#ifdef __cplusplus
}
#endif

#endif /* INVDEG_INVDEG_H */
