/*
 * C interface to the equivariant Hilbert series library.
 *
 * Objects are opaque handles created by eqh_*_create/compute functions and
 * released with the matching eqh_*_free. Every fallible call returns an
 * eqh_status; on failure eqh_last_error() describes the problem for the
 * calling thread. Strings returned through `char**` out-parameters are owned
 * by the caller and released with eqh_string_free. Large integers are
 * exchanged as decimal strings.
 */
#ifndef EQHILB_EQHILB_H
#define EQHILB_EQHILB_H

#include <stddef.h>

#if defined(_WIN32)
#define EQH_API __declspec(dllexport)
#else
#define EQH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eqh_status {
  EQH_OK = 0,
  EQH_ERR_PARSE = 1,
  EQH_ERR_EMPTY_MONOMIAL = 2,
  EQH_ERR_NEGATIVE_EXPONENT = 3,
  EQH_ERR_INVALID_TRUNCATION = 4,
  EQH_ERR_NOT_DIVISIBLE = 5,
  EQH_ERR_ZERO_NUMERATOR = 6,
  EQH_ERR_TOO_MANY_GENERATORS = 7,
  EQH_ERR_NO_PARENT = 8,
  EQH_ERR_UNSUPPORTED_R = 9,
  EQH_ERR_UNSUPPORTED_EXPONENT = 10,
  EQH_ERR_REPEATED_COLUMN_DEGREES = 11,
  EQH_ERR_INVALID_ARGUMENT = 12,
  EQH_ERR_INTERNAL = 13
} eqh_status;

typedef struct eqh_orbit eqh_orbit;
typedef struct eqh_series eqh_series;
typedef struct eqh_table eqh_table;
typedef struct eqh_degrees eqh_degrees;
typedef struct eqh_report eqh_report;
typedef struct eqh_oracle eqh_oracle;

EQH_API const char* eqh_status_name(eqh_status status);
/* Message of the last failure on this thread; "" if none. */
EQH_API const char* eqh_last_error(void);
/* Byte offset of the last parse failure on this thread, or -1. */
EQH_API long long eqh_last_error_position(void);
EQH_API void eqh_string_free(char* s);

/* ---- orbits ------------------------------------------------------------ */

/* Accepts `[[0,0,2,0,4]]` or `x[1,3]^2 x[1,5]^4`. */
EQH_API eqh_status eqh_orbit_parse(const char* text, eqh_orbit** out);
/* Row-major rows x cols exponent matrix. */
EQH_API eqh_status eqh_orbit_from_matrix(const long long* entries, size_t rows,
                                         size_t cols, eqh_orbit** out);
EQH_API void eqh_orbit_free(eqh_orbit* orbit);
EQH_API unsigned eqh_orbit_rows(const eqh_orbit* orbit);    /* c */
EQH_API unsigned eqh_orbit_width(const eqh_orbit* orbit);   /* mu_r */
EQH_API unsigned eqh_orbit_columns(const eqh_orbit* orbit); /* r */
/* 1-based index of the k-th non-zero column and its degree, k < r. */
EQH_API unsigned eqh_orbit_mu(const eqh_orbit* orbit, size_t k);
EQH_API unsigned eqh_orbit_b(const eqh_orbit* orbit, size_t k);
EQH_API eqh_status eqh_orbit_monomial_text(const eqh_orbit* orbit, char** out);
EQH_API eqh_status eqh_orbit_parent(const eqh_orbit* orbit, eqh_orbit** out);

/* ---- closed-form series ------------------------------------------------ */

EQH_API eqh_status eqh_series_compute(const eqh_orbit* orbit, eqh_series** out);
EQH_API void eqh_series_free(eqh_series* series);
EQH_API long long eqh_series_pow_one_minus_t(const eqh_series* series);
EQH_API size_t eqh_series_factor_count(const eqh_series* series);
EQH_API eqh_status eqh_series_text(const eqh_series* series, char** out);
EQH_API eqh_status eqh_series_numerator_text(const eqh_series* series, char** out);
/* `expansion` may be NULL. */
EQH_API eqh_status eqh_series_json(const eqh_series* series,
                                   const eqh_table* expansion, char** out);
/* Parses the document written by eqh_series_json. */
EQH_API eqh_status eqh_series_from_json(const char* json, eqh_series** series,
                                        eqh_table** expansion);
/* 1 when both series hold identical orbit, numerator and denominator. */
EQH_API int eqh_series_equal(const eqh_series* a, const eqh_series* b);
/* Small-r closed numerator equals the divided numerator: 1 yes, 0 no. */
EQH_API eqh_status eqh_series_small_r_matches(const eqh_orbit* orbit, int* matches);

EQH_API eqh_status eqh_series_expand(const eqh_series* series, long long nmax,
                                     long long degmax, eqh_table** out);
EQH_API void eqh_table_free(eqh_table* table);
EQH_API long long eqh_table_nmax(const eqh_table* table);
EQH_API long long eqh_table_degmax(const eqh_table* table);
EQH_API eqh_status eqh_table_entry(const eqh_table* table, long long n,
                                   long long j, char** out);
EQH_API eqh_status eqh_table_text(const eqh_table* table, char** out);

/* ---- degrees and dimensions -------------------------------------------- */

/* Rows for n = mu_r - 1 .. nmax. With `with_closed`, the partial-fraction
 * value is computed too when the column degrees are distinct. */
EQH_API eqh_status eqh_degrees_compute(const eqh_orbit* orbit, long long nmax,
                                       int with_closed, eqh_degrees** out);
EQH_API void eqh_degrees_free(eqh_degrees* degrees);
EQH_API size_t eqh_degrees_count(const eqh_degrees* degrees);
EQH_API long long eqh_degrees_n(const eqh_degrees* degrees, size_t row);
EQH_API long long eqh_degrees_dim(const eqh_degrees* degrees, size_t row);
EQH_API eqh_status eqh_degrees_degree(const eqh_degrees* degrees, size_t row,
                                      char** out);
/* EQH_ERR_REPEATED_COLUMN_DEGREES when no closed value is available. */
EQH_API eqh_status eqh_degrees_closed(const eqh_degrees* degrees, size_t row,
                                      char** out);
EQH_API eqh_status eqh_orbit_asymptotics(const eqh_orbit* orbit, long long* dim,
                                         long long* deg);

/* ---- verification ------------------------------------------------------ */

EQH_API eqh_status eqh_verify(const eqh_orbit* orbit, long long nmax,
                              long long degmax, size_t taylor_guard,
                              eqh_report** out);
EQH_API void eqh_report_free(eqh_report* report);
EQH_API size_t eqh_report_count(const eqh_report* report);
EQH_API const char* eqh_report_name(const eqh_report* report, size_t k);
/* 1 passed, 0 failed, -1 skipped. */
EQH_API int eqh_report_status(const eqh_report* report, size_t k);
EQH_API const char* eqh_report_detail(const eqh_report* report, size_t k);
EQH_API int eqh_report_passed(const eqh_report* report);

/* ---- oracle ------------------------------------------------------------ */

/* Brute-force Hilbert data of I_n. Unless `pivot_only`, the inclusion-
 * exclusion numerator is computed as well and fails with
 * EQH_ERR_TOO_MANY_GENERATORS above `taylor_guard` generators. */
EQH_API eqh_status eqh_oracle_compute(const eqh_orbit* orbit, long long n,
                                      long long degmax, int pivot_only,
                                      size_t taylor_guard, eqh_oracle** out);
EQH_API void eqh_oracle_free(eqh_oracle* oracle);
EQH_API size_t eqh_oracle_generator_count(const eqh_oracle* oracle);
EQH_API eqh_status eqh_oracle_generator_text(const eqh_oracle* oracle, size_t k,
                                             char** out);
EQH_API eqh_status eqh_oracle_numerator_text(const eqh_oracle* oracle, char** out);
EQH_API long long eqh_oracle_nvars(const eqh_oracle* oracle);
EQH_API long long eqh_oracle_dim(const eqh_oracle* oracle);
EQH_API eqh_status eqh_oracle_degree(const eqh_oracle* oracle, char** out);
EQH_API size_t eqh_oracle_hilbert_count(const eqh_oracle* oracle);
EQH_API eqh_status eqh_oracle_hilbert_value(const eqh_oracle* oracle, size_t j,
                                            char** out);
/* 1 agree, 0 disagree, -1 inclusion-exclusion not run. */
EQH_API int eqh_oracle_taylor_agrees(const eqh_oracle* oracle);

#ifdef __cplusplus
}
#endif

#endif /* EQHILB_EQHILB_H */
