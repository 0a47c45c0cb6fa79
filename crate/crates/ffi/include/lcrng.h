#ifndef LCRNG_H
#define LCRNG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes. Values 1 and 2 mirror the command-line exit codes.
typedef enum LcrStatus {
  LCR_STATUS_OK = 0,
  // An axiom or claimed property fails.
  LCR_STATUS_VIOLATION = 1,
  // Malformed input or an unmet precondition.
  LCR_STATUS_INVALID_INPUT = 2,
  LCR_STATUS_NULL_POINTER = 3,
  LCR_STATUS_PANIC = 4,
} LcrStatus;

// A validated left commutative rng.
typedef struct LcrStructure LcrStructure;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a structure document of kind `lcrng` and validates it.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum LcrStatus lcr_structure_from_json(const char *json, struct LcrStructure **out);

// Builds `A ⋉ B` from ring specs such as `zmod:4` or `zmod:2xzmod:2` and a
// homomorphism spec (`auto`, `id`, `reduce`, `proj:<i>`, `map:<i,j,...>`).
//
// # Safety
// String arguments must be NUL-terminated; `out` must be writable.
enum LcrStatus lcr_structure_semidirect(const char *a,
                                        const char *b,
                                        const char *phi,
                                        struct LcrStructure **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void lcr_structure_free(struct LcrStructure *s);

// # Safety
// `s` must be a live handle; `out` must be writable.
enum LcrStatus lcr_structure_order(const struct LcrStructure *s, uintptr_t *out);

// # Safety
// `s` must be a live handle; `out` must be writable.
enum LcrStatus lcr_structure_left_identity(const struct LcrStructure *s, uintptr_t *out);

// The halo as a bitmask: bit `i` is set when element `i` is in it.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum LcrStatus lcr_structure_halo_bits(const struct LcrStructure *s, uint64_t *out);

// The canonical JSON document. Free the result with `lcr_string_free`.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum LcrStatus lcr_structure_to_json(const struct LcrStructure *s, char **out);

// `x•y = xy + yx - (yx)·1l`.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum LcrStatus lcr_induced_product(const struct LcrStructure *s,
                                   uintptr_t x,
                                   uintptr_t y,
                                   uintptr_t *out);

// The Hu-Liu prime ideals as `subset;is_prime;components` rows with a header
// line. Free the result with `lcr_string_free`.
//
// # Safety
// `s` must be a live handle; `out` must be writable.
enum LcrStatus lcr_spectrum_csv(const struct LcrStructure *s, char **out);

// Checks lying-over for the subrng whose elements are the set bits of
// `subset`. Returns `LCR_STATUS_OK` when every prime of the subrng has a
// prime lying over it and every maximal element of each T-set is prime,
// `LCR_STATUS_VIOLATION` otherwise, and `LCR_STATUS_INVALID_INPUT` when the
// subset is not a subrng over which the structure is graded integral.
//
// # Safety
// `s` must be a live handle.
enum LcrStatus lcr_verify_lying_over(const struct LcrStructure *s, uint64_t subset, bool lenient);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `p` must come from this library and not have been freed.
void lcr_string_free(char *p);

// Message for the last failed call on this thread, or an empty string. The
// pointer stays valid until the next call into the library on this thread.
const char *lcr_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LCRNG_H */
