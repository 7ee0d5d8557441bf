#ifndef ACYCLIC_ORIENT_H
#define ACYCLIC_ORIENT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

#define ORIENT_OK 0

#define ORIENT_ERR_NULL 1

#define ORIENT_ERR_UTF8 2

#define ORIENT_ERR_PARSE 3

#define ORIENT_ERR_TOO_LARGE 4

#define ORIENT_ERR_INVALID_ARGUMENT 5

#define ORIENT_ERR_BUFFER_TOO_SMALL 6

#define ORIENT_ERR_INTERNAL 7

#define ORIENT_KIND_DCAOP 0

#define ORIENT_KIND_PR1 1

#define ORIENT_KIND_VC 2

#define ORIENT_KIND_NAE 3

#define ORIENT_KIND_PROBLEM3 4

/**
 * Opaque parsed instance.
 */
typedef struct OrientInstance OrientInstance;

/**
 * Opaque solver outcome.
 */
typedef struct OrientResult OrientResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse instance text (the `p <kind> ...` file format) into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
int32_t orient_instance_parse(const char *text, struct OrientInstance **out);

/**
 * # Safety
 * `instance` must come from this library and not be used afterwards. Null is ignored.
 */
void orient_instance_free(struct OrientInstance *instance);

/**
 * One of the `ORIENT_KIND_*` values, or -1 for a null handle.
 *
 * # Safety
 * `instance` must be null or a live handle.
 */
int32_t orient_instance_kind(const struct OrientInstance *instance);

/**
 * Vertex count of the graph, variable count of a formula, 0 for a null handle.
 *
 * # Safety
 * `instance` must be null or a live handle.
 */
uintptr_t orient_instance_vertex_count(const struct OrientInstance *instance);

/**
 * Canonical text form; release with [`orient_string_free`]. Null on a null handle.
 *
 * # Safety
 * `instance` must be null or a live handle.
 */
char *orient_instance_serialize(const struct OrientInstance *instance);

/**
 * Decide with the fastest exact method; falls back to the exhaustive search (default cap).
 *
 * # Safety
 * `instance` must be a live handle and `out` a valid pointer.
 */
int32_t orient_solve(const struct OrientInstance *instance, struct OrientResult **out);

/**
 * Decide by exhaustive search. `max_vertices` of 0 means the default cap.
 *
 * # Safety
 * `instance` must be a live handle and `out` a valid pointer.
 */
int32_t orient_oracle(const struct OrientInstance *instance, uintptr_t max_vertices, struct OrientResult **out);

/**
 * # Safety
 * `result` must come from this library and not be used afterwards. Null is ignored.
 */
void orient_result_free(struct OrientResult *result);

/**
 * 1 if feasible, 0 if infeasible, -1 for a null handle.
 *
 * # Safety
 * `result` must be null or a live handle.
 */
int32_t orient_result_is_feasible(const struct OrientResult *result);

/**
 * Length of the witness vertex list: the order, or the cover for vertex cover instances.
 * 0 when infeasible, for formulas, or for a null handle.
 *
 * # Safety
 * `result` must be null or a live handle.
 */
uintptr_t orient_result_witness_len(const struct OrientResult *result);

/**
 * Copy the witness vertex list (0-based) into `buffer` of `capacity` entries.
 *
 * # Safety
 * `result` must be a live handle and `buffer` valid for `capacity` writes.
 */
int32_t orient_result_copy_witness(const struct OrientResult *result, uintptr_t *buffer, uintptr_t capacity);

/**
 * The same JSON document the command line prints; release with [`orient_string_free`].
 *
 * # Safety
 * `result` must be null or a live handle.
 */
char *orient_result_json(const struct OrientResult *result);

/**
 * Check a 0-based vertex order against a bounded-orientation, path or four-terminal
 * instance. Writes 1 to `valid` when accepted, 0 otherwise.
 *
 * # Safety
 * `instance` must be a live handle, `order` valid for `len` reads, `valid` a valid pointer.
 */
int32_t orient_verify_order(const struct OrientInstance *instance, const uintptr_t *order, uintptr_t len, int32_t *valid);

/**
 * Apply a named reduction (`vc2dcaop`, `dcaop2pr1`, `nae2pr1`, `simplify`, `pr1toP3`).
 *
 * # Safety
 * `instance` must be a live handle, `reduction` a NUL-terminated string, `out` valid.
 */
int32_t orient_reduce(const struct OrientInstance *instance, const char *reduction, struct OrientInstance **out);

/**
 * Message for the last failed call on this thread; empty after a success. Valid until the
 * next call into this library on the same thread.
 */
const char *orient_last_error(void);

/**
 * # Safety
 * `text` must come from this library and not be used afterwards. Null is ignored.
 */
void orient_string_free(char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ACYCLIC_ORIENT_H */
