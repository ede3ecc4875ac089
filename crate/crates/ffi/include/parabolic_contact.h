#ifndef PARABOLIC_CONTACT_H
#define PARABOLIC_CONTACT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PcStatus {
  PC_STATUS_OK = 0,
  PC_STATUS_NULL_ARGUMENT = 1,
  PC_STATUS_INVALID_UTF8 = 2,
  PC_STATUS_PARSE = 3,
  PC_STATUS_INVALID_SURFACE = 4,
  PC_STATUS_CLASSIFICATION = 5,
  PC_STATUS_UNREACHABLE = 6,
  PC_STATUS_PANIC = 7,
} PcStatus;

/**
 * Opaque surface handle.
 */
typedef struct PcSurface PcSurface;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a surface file (`monge K=<n>` header and `a i j value` lines).
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum PcStatus pc_surface_parse(const char *text, bool allow_decimal, struct PcSurface **out);

/**
 * Builds a surface from `n` rational coefficients `a_{i[k] j[k]} = num[k]/den[k]`.
 *
 * # Safety
 * The four arrays must each hold `n` elements; `out` must be valid.
 */
enum PcStatus pc_surface_from_coeffs(uint32_t bound,
                                     size_t n,
                                     const uint32_t *i,
                                     const uint32_t *j,
                                     const int64_t *num,
                                     const int64_t *den,
                                     struct PcSurface **out);

/**
 * # Safety
 * `s` must come from a constructor in this library, or be null.
 */
void pc_surface_free(struct PcSurface *s);

/**
 * Degree bound `K` of the handle, or 0 for a null handle.
 *
 * # Safety
 * `s` must be a live handle or null.
 */
uint32_t pc_surface_degree_bound(const struct PcSurface *s);

/**
 * Canonical file text of the surface.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
enum PcStatus pc_surface_print(const struct PcSurface *s, char **out);

/**
 * Stratum label such as `(iii)`, or `outside` / `boundary(...)`.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
enum PcStatus pc_classify_stratum(const struct PcSurface *s, char **out);

/**
 * Singularity of the projection, e.g. `lips` or `sixteen(+)`.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
enum PcStatus pc_classify_projection(const struct PcSurface *s, char **out);

/**
 * Contact class with the cylinder over the directrix `g1,g2,...`.
 *
 * # Safety
 * `s` must be a live handle, `curve` a NUL-terminated string and `out` valid.
 */
enum PcStatus pc_classify_contact(const struct PcSurface *s, const char *curve, char **out);

/**
 * Directrices realizing `target` (e.g. `D_5`), one `g1,g2,...` per line.
 *
 * # Safety
 * `s` must be a live handle, `target` a NUL-terminated string and `out` valid.
 */
enum PcStatus pc_cylinder(const struct PcSurface *s, const char *target, char **out);

/**
 * Full `key: value` report: stratum, invariants, projection and cylinders.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
enum PcStatus pc_report(const struct PcSurface *s, bool trace, char **out);

/**
 * Cylinder report for a single target in `key: value` form.
 *
 * # Safety
 * `s` must be a live handle, `target` a NUL-terminated string and `out` valid.
 */
enum PcStatus pc_cylinder_report(const struct PcSurface *s, const char *target, char **out);

/**
 * # Safety
 * `p` must come from this library, or be null.
 */
void pc_string_free(char *p);

/**
 * Message for the last failing call on this thread; empty after success.
 * Valid until the next call into the library on the same thread.
 */
const char *pc_last_error(void);

/**
 * Static name of a status code.
 */
const char *pc_status_name(enum PcStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PARABOLIC_CONTACT_H */
