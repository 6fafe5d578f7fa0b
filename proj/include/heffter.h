/*
 * C API for the heffter library: construction and verification of simple
 * cyclic relative Heffter spaces, relative Heffter arrays, cyclic cycle
 * decompositions and Crazy Knight's Tour certificates.
 *
 * Every object is an opaque handle created by a heffter_*_build/from_json
 * call and released by the matching heffter_*_free. Functions return
 * HEFFTER_OK on success; on failure heffter_last_error() describes the
 * problem for the calling thread. Strings returned through char** are
 * heap-allocated and must be released with heffter_string_free.
 *
 * All integers in serialized output are symmetric residue representatives
 * in [-(w-1)/2, (w-1)/2]; output bytes are deterministic for a given input.
 */
#ifndef HEFFTER_H
#define HEFFTER_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum heffter_status {
  HEFFTER_OK = 0,
  HEFFTER_ERR_INVALID = 1,      /* invalid argument or parameter set */
  HEFFTER_ERR_PARSE = 2,        /* malformed serialized input */
  HEFFTER_ERR_NOT_ZERO_SUM = 3, /* block does not sum to zero */
  HEFFTER_ERR_NOT_SIMPLE = 4,   /* stored ordering repeats a partial sum */
  HEFFTER_ERR_TOO_LARGE = 5,    /* exhaustive-search bound exceeded */
  HEFFTER_ERR_SHAPE = 6,        /* classes do not induce a square array */
  HEFFTER_ERR_INTERNAL = 7
} heffter_status;

typedef struct heffter_space heffter_space;
typedef struct heffter_array heffter_array;
typedef struct heffter_decomposition heffter_decomposition;
typedef struct heffter_report heffter_report;

const char* heffter_version(void);

/* Message for the most recent failing call on this thread. */
const char* heffter_last_error(void);

void heffter_string_free(char* s);

/* ---- spaces ---- */

/* The (nk, k; Phi(k)+1)_n space for odd n, k | n, k >= 3. */
heffter_status heffter_space_build_divisor(long long n, long long k, heffter_space** out);

/* The (pk, k; p)_p space for prime p >= 3, 3 <= k <= p. */
heffter_status heffter_space_build_prime(long long p, long long k, heffter_space** out);

/* The (p^2, p; p)_p Heffter net. */
heffter_status heffter_space_build_net(long long p, heffter_space** out);

heffter_status heffter_space_from_json(const char* json, heffter_space** out);
heffter_status heffter_space_to_json(const heffter_space* space, char** out);
heffter_status heffter_space_verify(const heffter_space* space, heffter_report** out);
heffter_status heffter_space_class_count(const heffter_space* space, long long* out);

/* Collinearity density r(k-1)/(v-1) as an exact fraction. */
heffter_status heffter_space_density(const heffter_space* space, long long* num,
                                     long long* den);
void heffter_space_free(heffter_space* space);

/* ---- arrays ---- */

/* Block-diagonal globally simple H_n(n;k), odd n, k | n. */
heffter_status heffter_array_build_block(long long n, long long k, heffter_array** out);

/* Cyclically k-diagonal globally simple H_p(p;k), p prime, 3 <= k <= p. */
heffter_status heffter_array_build_diagonal(long long p, long long k, heffter_array** out);

/* Array realizing classes a (rows) and b (columns) of a space. */
heffter_status heffter_array_from_classes(const heffter_space* space, long long a,
                                          long long b, heffter_array** out);

heffter_status heffter_array_from_json(const char* json, heffter_array** out);
heffter_status heffter_array_to_json(const heffter_array* arr, char** out);
heffter_status heffter_array_to_grid(const heffter_array* arr, char** out);
heffter_status heffter_array_verify(const heffter_array* arr, heffter_report** out);
void heffter_array_free(heffter_array* arr);

/* ---- cycle decompositions ---- */

/* Base cycles of one parallel class; develop != 0 also expands the full
 * orbit under translation. */
heffter_status heffter_space_decompose(const heffter_space* space, long long class_index,
                                       int develop, heffter_decomposition** out);
heffter_status heffter_decomposition_from_json(const char* json,
                                               heffter_decomposition** out);
heffter_status heffter_decomposition_develop(heffter_decomposition* dec);
heffter_status heffter_decomposition_is_developed(const heffter_decomposition* dec,
                                                  int* out);
heffter_status heffter_decomposition_to_json(const heffter_decomposition* dec, char** out);
heffter_status heffter_decomposition_verify(const heffter_decomposition* dec,
                                            heffter_report** out);
void heffter_decomposition_free(heffter_decomposition* dec);

/* ---- Crazy Knight's Tour ---- */

/* Orientation strings hold one '+' or '-' per row/column. On success *found
 * is 1 and the rows and cols strings carry the lexicographically least
 * solution, or *found is 0 and the strings are NULL. */
heffter_status heffter_knight_solve(const heffter_array* arr, char** rows, char** cols,
                                    int* found);

/* Trace of the composed successor map from (start_row, start_col); emits
 * JSON with the visited cells and the solution flag. */
heffter_status heffter_knight_trace(const heffter_array* arr, const char* rows,
                                    const char* cols, long long start_row,
                                    long long start_col, char** trace_json);

/* ---- numbers ---- */

/* Biembedding surface genus 1 + (nk-2n-1)(2nk+t)/2 as an exact fraction;
 * *integral reports whether it is an integer. */
heffter_status heffter_genus(long long n, long long k, long long t, long long* num,
                             long long* den, int* integral);

/* Lexicographically least simple ordering of a zero-sum block of Z_w.
 * ordering must hold k entries; *found is 0 when no ordering is simple.
 * Entries are symmetric representatives. */
heffter_status heffter_simple_ordering(long long w, const long long* block, long long k,
                                       long long* ordering, int* found);

/* ---- verification reports ---- */

heffter_status heffter_report_passed(const heffter_report* report, int* out);
heffter_status heffter_report_to_json(const heffter_report* report, char** out);
void heffter_report_free(heffter_report* report);

/* Document kind probe for dispatching verification: 0 space, 1 array,
 * 2 decomposition. */
heffter_status heffter_detect_document(const char* json, int* kind);

#ifdef __cplusplus
}
#endif

#endif /* HEFFTER_H */
