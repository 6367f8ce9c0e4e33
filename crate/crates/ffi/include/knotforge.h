#ifndef KNOTFORGE_H
#define KNOTFORGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum KfStatus {
  KF_STATUS_OK = 0,
  KF_STATUS_NULL_POINTER = 1,
  KF_STATUS_INVALID_UTF8 = 2,
  KF_STATUS_INPUT_ERROR = 3,
  KF_STATUS_PRECONDITION_FAILED = 4,
  KF_STATUS_COMPUTE_ERROR = 5,
  KF_STATUS_PANIC = 6,
} KfStatus;

/**
 * Parsed link diagram.
 */
typedef struct KfDiagram KfDiagram;

/**
 * Finite quandle, rack or magma with two operations.
 */
typedef struct KfQuandle KfQuandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string.
 */
const char *kf_version(void);

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into the library from the same thread.
 */
const char *kf_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void kf_string_free(char *s);

/**
 * Parse PD notation, a `{"pd": ..., "free_loops": ...}` document or a braid word.
 *
 * # Safety
 * `src` must be a nul-terminated string and `out` a writable pointer.
 */
enum KfStatus kf_diagram_parse(const char *src, struct KfDiagram **out);

/**
 * Built-in diagram by name, e.g. `trefoil_right`.
 *
 * # Safety
 * `name` must be a nul-terminated string and `out` a writable pointer.
 */
enum KfStatus kf_diagram_corpus(const char *name, struct KfDiagram **out);

/**
 * # Safety
 * `d` must be null or a handle from this library, freed once.
 */
void kf_diagram_free(struct KfDiagram *d);

/**
 * # Safety
 * `d` must be a live handle; the output pointers must be writable.
 */
enum KfStatus kf_diagram_summary(const struct KfDiagram *d,
                                 size_t *crossings,
                                 size_t *components,
                                 int64_t *writhe);

/**
 * Number of Fox `n`-colorings.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum KfStatus kf_fox_count(const struct KfDiagram *d, size_t n, uint64_t *out);

/**
 * Fox coloring group as `{"rank", "torsion"}`.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum KfStatus kf_coloring_group_json(const struct KfDiagram *d, char **out);

/**
 * Kauffman bracket as `[[exponent, coefficient], ...]` in `A`.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum KfStatus kf_bracket_json(const struct KfDiagram *d, char **out);

/**
 * Unreduced Jones polynomial as `[[exponent, coefficient], ...]` in `q`.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum KfStatus kf_jones_json(const struct KfDiagram *d, char **out);

/**
 * Khovanov homology table, rows `j` descending and columns `i` ascending.
 *
 * # Safety
 * `d` must be a live handle and `out` writable.
 */
enum KfStatus kf_khovanov_json(const struct KfDiagram *d, char **out);

/**
 * Quandle from `{"size", "star", "starbar"}`.
 *
 * # Safety
 * `src` must be a nul-terminated string and `out` writable.
 */
enum KfStatus kf_quandle_parse(const char *src, struct KfQuandle **out);

/**
 * Dihedral quandle of order `n`.
 *
 * # Safety
 * `out` must be writable.
 */
enum KfStatus kf_quandle_dihedral(size_t n, struct KfQuandle **out);

/**
 * # Safety
 * `q` must be null or a handle from this library, freed once.
 */
void kf_quandle_free(struct KfQuandle *q);

/**
 * Number of colorings of `d` by `q`; `KF_STATUS_PRECONDITION_FAILED` if `q` is not a rack.
 *
 * # Safety
 * `d` and `q` must be live handles and `out` writable.
 */
enum KfStatus kf_quandle_coloring_count(const struct KfDiagram *d,
                                        const struct KfQuandle *q,
                                        uint64_t *out);

/**
 * Rack homology in `degree` as `{"rank", "torsion"}`.
 *
 * # Safety
 * `q` must be a live handle and `out` writable.
 */
enum KfStatus kf_rack_homology_json(const struct KfQuandle *q, size_t degree, char **out);

/**
 * One-term distributive homology in `degree` as `{"rank", "torsion"}`.
 *
 * # Safety
 * `q` must be a live handle and `out` writable.
 */
enum KfStatus kf_one_term_homology_json(const struct KfQuandle *q, size_t degree, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KNOTFORGE_H */
