#ifndef EXCITATION_H
#define EXCITATION_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum ExcStatus {
  EXC_STATUS_OK = 0,
  EXC_STATUS_NULL_ARGUMENT = 1,
  EXC_STATUS_INVALID_UTF8 = 2,
  EXC_STATUS_INVALID_PARAMETERS = 3,
  EXC_STATUS_INDEX_OUT_OF_RANGE = 4,
  EXC_STATUS_DIMENSION_MISMATCH = 5,
  EXC_STATUS_SHAPE_MISMATCH = 6,
  EXC_STATUS_MALFORMED = 7,
  EXC_STATUS_PARSE = 8,
  EXC_STATUS_BUDGET_EXCEEDED = 9,
  EXC_STATUS_ZERO_POLYNOMIAL = 10,
  EXC_STATUS_PROPERTY_VIOLATION = 11,
  EXC_STATUS_LINEAR_DEPENDENCE = 12,
  EXC_STATUS_OVERFLOW = 13,
  EXC_STATUS_PANIC = 14,
} ExcStatus;

// A list of exponent matrices of equal shape.
typedef struct ExcMatrixList ExcMatrixList;

// Named pass/fail checks from one of the verifiers.
typedef struct ExcReport ExcReport;

// The quotient ring with its generators loaded for normal forms.
typedef struct ExcRing ExcRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the most recent failure on this thread, or null after a
// success. The pointer stays valid until the next call into this library
// on the same thread.
const char *exc_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, freed at most once.
void exc_string_free(char *s);

// `N(n, r)` written to `out`.
//
// # Safety
// `out` must be valid for writes.
enum ExcStatus exc_narayana(uint64_t n, uint64_t r, uint64_t *out);

// # Safety
// `out` must be valid for writes.
enum ExcStatus exc_catalan(uint64_t n, uint64_t *out);

// Dimension of the quotient ring, counted by enumerating standard monomials.
//
// # Safety
// `out` must be valid for writes.
enum ExcStatus exc_dimension(size_t m, size_t k, uint64_t *out);

// Whether the `rows x cols` row-major exponent matrix is standard.
//
// # Safety
// `entries` must point to `rows * cols` values; `out` must be valid for writes.
enum ExcStatus exc_is_standard(const uint32_t *entries, size_t rows, size_t cols, bool *out);

// Dimension of the sl2-invariant subspace of the `d`-particle space on `m` sites.
//
// # Safety
// `out` must be valid for writes.
enum ExcStatus exc_fock_invariant_dimension(size_t m, size_t d, uint64_t *out);

// Dyck word of a standard `k x (m - k)` matrix, as a `u`/`d` string.
//
// # Safety
// `entries` must point to `rows * cols` values; `out` must be valid for writes.
enum ExcStatus exc_matrix_to_dyck(const uint32_t *entries, size_t rows, size_t cols, char **out);

// Standard matrix of a Dyck word; the result is a list holding one matrix.
//
// # Safety
// `word` must be a nul-terminated string; `out` must be valid for writes.
enum ExcStatus exc_dyck_to_matrix(const char *word, struct ExcMatrixList **out);

// Standard monomials of the quotient, degree ascending.
//
// # Safety
// `out` must be valid for writes.
enum ExcStatus exc_standard_monomials(size_t m, size_t k, struct ExcMatrixList **out);

// # Safety
// `list` must be null or a live handle.
size_t exc_matrix_list_len(const struct ExcMatrixList *list);

// # Safety
// `list` must be null or a live handle.
size_t exc_matrix_list_rows(const struct ExcMatrixList *list);

// # Safety
// `list` must be null or a live handle.
size_t exc_matrix_list_cols(const struct ExcMatrixList *list);

// Row-major entries of matrix `index`, or null when out of range. The
// pointer lives as long as the list.
//
// # Safety
// `list` must be null or a live handle.
const uint32_t *exc_matrix_list_get(const struct ExcMatrixList *list, size_t index);

// # Safety
// `list` must be null or a handle from this library, freed at most once.
void exc_matrix_list_free(struct ExcMatrixList *list);

// # Safety
// `out` must be valid for writes.
enum ExcStatus exc_ring_new(size_t m, size_t k, struct ExcRing **out);

// # Safety
// `ring` must be null or a handle from this library, freed at most once.
void exc_ring_free(struct ExcRing *ring);

// # Safety
// `ring` must be null or a live handle.
size_t exc_ring_m(const struct ExcRing *ring);

// # Safety
// `ring` must be null or a live handle.
size_t exc_ring_k(const struct ExcRing *ring);

// # Safety
// `ring` must be null or a live handle.
size_t exc_ring_generator_count(const struct ExcRing *ring);

// Normal form of a polynomial given in the text format, e.g.
// `"3*X[1,1]^2*X[2,2] - 1/2"`.
//
// # Safety
// `ring` must be a live handle, `poly` a nul-terminated string and `out`
// valid for writes.
enum ExcStatus exc_ring_normal_form(const struct ExcRing *ring, const char *poly, char **out);

// Buchberger's criterion for the generators.
//
// # Safety
// `out` must be valid for writes.
enum ExcStatus exc_verify_groebner(size_t m, size_t k, struct ExcReport **out);

// Round trips through the matrix, tableau, plane partition and Dyck word bijections.
//
// # Safety
// `out` must be valid for writes.
enum ExcStatus exc_verify_chain(size_t m, size_t k, struct ExcReport **out);

// Operator algebra, invariant subspace and excitation basis checks on the Fock space.
//
// # Safety
// `out` must be valid for writes.
enum ExcStatus exc_verify_fock(size_t m, size_t k, struct ExcReport **out);

// # Safety
// `report` must be null or a live handle.
size_t exc_report_len(const struct ExcReport *report);

// # Safety
// `report` must be null or a live handle.
bool exc_report_all_passed(const struct ExcReport *report);

// # Safety
// `report` must be null or a live handle.
bool exc_report_passed(const struct ExcReport *report, size_t index);

// Name of check `index`, or null when out of range. Lives as long as the report.
//
// # Safety
// `report` must be null or a live handle.
const char *exc_report_name(const struct ExcReport *report, size_t index);

// Detail line of check `index`, or null when out of range. Lives as long as the report.
//
// # Safety
// `report` must be null or a live handle.
const char *exc_report_detail(const struct ExcReport *report, size_t index);

// # Safety
// `report` must be null or a handle from this library, freed at most once.
void exc_report_free(struct ExcReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EXCITATION_H */
