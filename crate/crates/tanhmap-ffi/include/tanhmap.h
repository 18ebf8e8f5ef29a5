/* C API for the tanhmap library. Generated by cbindgen; do not edit. */

#ifndef TANHMAP_H
#define TANHMAP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every API call.
typedef enum TanhmapStatus {
  TANHMAP_STATUS_OK = 0,
  // A required pointer argument was null.
  TANHMAP_STATUS_NULL_ARGUMENT = 1,
  // A numeric argument violated its domain invariant.
  TANHMAP_STATUS_INVALID_PARAMETER = 2,
  // The orbit tripped the divergence guard (|y| > 1e12).
  TANHMAP_STATUS_DIVERGENCE = 3,
} TanhmapStatus;

// Long-term orbit behavior, mirroring the library's classification.
typedef enum TanhmapClass {
  TANHMAP_CLASS_FIXED_POINT = 0,
  TANHMAP_CLASS_PERIODIC = 1,
  TANHMAP_CLASS_APERIODIC = 2,
  TANHMAP_CLASS_DIVERGENT = 3,
} TanhmapClass;

// Opaque handle holding a validated parameter set.
typedef struct TanhmapParams TanhmapParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *tanhmap_version(void);

// Creates parameters with the linear growth shape `f(y) = 1 - y`.
//
// # Safety
// `out` must be a valid pointer to a handle slot.
enum TanhmapStatus tanhmap_params_new_linear(double gamma_min,
                                             double gamma_max,
                                             double c,
                                             struct TanhmapParams **out);

// Creates parameters with the tanh growth shape of steepness `a_y`.
//
// # Safety
// `out` must be a valid pointer to a handle slot.
enum TanhmapStatus tanhmap_params_new_tanh(double a_y,
                                           double gamma_min,
                                           double gamma_max,
                                           double c,
                                           struct TanhmapParams **out);

// Releases a handle. Null is accepted and ignored.
//
// # Safety
// `params` must be null or a handle obtained from a constructor, not yet
// freed.
void tanhmap_params_free(struct TanhmapParams *params);

// Growth rate `gamma(y)`.
//
// # Safety
// `params` must be a live handle; `out` must be valid for one f64.
enum TanhmapStatus tanhmap_growth_rate(const struct TanhmapParams *params, double y, double *out);

// One map application `c * gamma(y) * y`.
//
// # Safety
// `params` must be a live handle; `out` must be valid for one f64.
enum TanhmapStatus tanhmap_step(const struct TanhmapParams *params, double y, double *out);

// Analytic derivative of the map at `y`.
//
// # Safety
// `params` must be a live handle; `out` must be valid for one f64.
enum TanhmapStatus tanhmap_step_derivative(const struct TanhmapParams *params,
                                           double y,
                                           double *out);

// Iterates the map `n` times from `y0`, writing the full trace of `n + 1`
// values (including `y0`) to `out`.
//
// # Safety
// `params` must be a live handle; `out` must be valid for `n + 1` f64s.
enum TanhmapStatus tanhmap_iterate(const struct TanhmapParams *params,
                                   double y0,
                                   size_t n,
                                   double *out);

// Runs `transient` steps from `y0`, then writes the following `len`
// post-transient values to `out`.
//
// # Safety
// `params` must be a live handle; `out` must be valid for `len` f64s.
enum TanhmapStatus tanhmap_sample_orbit(const struct TanhmapParams *params,
                                        double y0,
                                        size_t transient,
                                        size_t len,
                                        double *out);

// Classifies the orbit's long-term behavior with the default detector
// tolerances. `out_period` receives the minimal period for cycles (1 for a
// fixed point) and 0 otherwise. A divergent orbit is a valid classification
// here, not an error.
//
// # Safety
// `params` must be a live handle; `out_class` and `out_period` must each be
// valid for one value.
enum TanhmapStatus tanhmap_classify(const struct TanhmapParams *params,
                                    double y0,
                                    size_t transient,
                                    enum TanhmapClass *out_class,
                                    size_t *out_period);

// Lyapunov exponent averaged over `n` post-transient steps. Superstable
// orbits yield negative infinity.
//
// # Safety
// `params` must be a live handle; `out` must be valid for one f64.
enum TanhmapStatus tanhmap_lyapunov(const struct TanhmapParams *params,
                                    double y0,
                                    size_t transient,
                                    size_t n,
                                    double *out);

// Default Lyapunov step count used by the library's sweeps.
size_t tanhmap_lyapunov_default_steps(void);

// Occupied-pixel count of `samples` post-transient values on the 100-pixel
// partition of [0, 1].
//
// # Safety
// `params` must be a live handle; `out` must be valid for one u32.
enum TanhmapStatus tanhmap_spread_occupied(const struct TanhmapParams *params,
                                           double y0,
                                           size_t transient,
                                           size_t samples,
                                           uint32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TANHMAP_H */
