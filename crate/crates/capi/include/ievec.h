#ifndef IEVEC_H
#define IEVEC_H

/* Generated by cbindgen from ievec-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes; nonzero values match the CLI exit codes where one exists.
typedef enum IevecStatus {
  IEVEC_STATUS_OK = 0,
  // A null pointer or otherwise unusable argument.
  IEVEC_STATUS_NULL_ARGUMENT = 1,
  // Malformed or semantically invalid input.
  IEVEC_STATUS_BAD_INPUT = 2,
  // The system's union is empty.
  IEVEC_STATUS_EMPTY_UNION = 3,
  // The tube construction exhausted its restart budget.
  IEVEC_STATUS_RESTARTS_EXHAUSTED = 4,
  // The vector is not an IE-vector for the system.
  IEVEC_STATUS_VALIDATION_FAILED = 5,
  // A size budget (nerve, lattice) was exceeded.
  IEVEC_STATUS_RESOURCE_EXCEEDED = 6,
  // An internal panic was caught; the handle state is unchanged.
  IEVEC_STATUS_PANIC = 7,
} IevecStatus;

// An IE coefficient vector, with optional tube metadata. Opaque.
typedef struct IevecVector IevecVector;

// A standardized set system (its Venn diagram). Opaque.
typedef struct IevecVenn IevecVenn;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Last error message raised on this thread, or an empty string. The
// pointer stays valid until the next failing call on the same thread.
const char *ievec_last_error_message(void);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `text` must have been returned by an ievec function and not freed yet.
void ievec_string_free(char *text);

// Parses a `set_system` or `venn` JSON document and standardizes it.
// On success writes a fresh handle to `out`.
//
// # Safety
// `json_text` must be a valid NUL-terminated C string and `out` a valid
// pointer to a pointer slot.
enum IevecStatus ievec_venn_parse(const char *json_text, struct IevecVenn **out);

// # Safety
// `handle` must come from `ievec_venn_parse` and not be freed twice.
void ievec_venn_free(struct IevecVenn *handle);

// Number of sets n, or 0 for a null handle.
//
// # Safety
// `handle` must be a live handle or NULL.
uint32_t ievec_venn_set_count(const struct IevecVenn *handle);

// Number of Venn regions m, or 0 for a null handle.
//
// # Safety
// `handle` must be a live handle or NULL.
size_t ievec_venn_region_count(const struct IevecVenn *handle);

// Canonical `venn` JSON for a handle; caller frees via `ievec_string_free`.
//
// # Safety
// `handle` must be a live handle or NULL.
char *ievec_venn_to_json(const struct IevecVenn *handle);

// Computes the unique IE-vector supported on the Venn diagram.
//
// # Safety
// `handle` must be a live handle; `out` a valid pointer slot.
enum IevecStatus ievec_mobius(const struct IevecVenn *handle, struct IevecVector **out);

// Computes a ±1 abstract-tube IE-vector with the given seed and restart
// budget; metadata (permutation, restarts, bound, complex size) rides along
// in the handle and its JSON form.
//
// # Safety
// `handle` must be a live handle; `out` a valid pointer slot.
enum IevecStatus ievec_tube(const struct IevecVenn *handle,
                            uint64_t seed,
                            uint32_t max_restarts,
                            struct IevecVector **out);

// Parses an `ie_vector` JSON document.
//
// # Safety
// `json_text` must be a valid NUL-terminated C string and `out` a valid
// pointer slot.
enum IevecStatus ievec_vector_parse(const char *json_text, struct IevecVector **out);

// # Safety
// `handle` must come from a vector-producing call and not be freed twice.
void ievec_vector_free(struct IevecVector *handle);

// Number of nonzero coefficients.
//
// # Safety
// `handle` must be a live handle or NULL.
size_t ievec_vector_support_size(const struct IevecVector *handle);

// Largest term cardinality.
//
// # Safety
// `handle` must be a live handle or NULL.
size_t ievec_vector_max_term_size(const struct IevecVector *handle);

// ℓ1-norm as a decimal string (coefficients can exceed any fixed width);
// caller frees via `ievec_string_free`.
//
// # Safety
// `handle` must be a live handle or NULL.
char *ievec_vector_l1_decimal(const struct IevecVector *handle);

// Canonical `ie_vector` JSON (including summary fields and any tube
// metadata); caller frees via `ievec_string_free`.
//
// # Safety
// `handle` must be a live handle or NULL.
char *ievec_vector_to_json(const struct IevecVector *handle);

// Certifies `vector` against `venn`: the exact per-region sums plus
// `trials` random-measure spot checks. Returns `Ok` on PASS and
// `ValidationFailed` (with a message listing the first violations) on FAIL.
//
// # Safety
// Both handles must be live.
enum IevecStatus ievec_validate(const struct IevecVenn *venn,
                                const struct IevecVector *vector,
                                uint32_t trials,
                                uint64_t seed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* IEVEC_H */
