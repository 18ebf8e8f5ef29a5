//! C ABI for the tanhmap library.
//!
//! Parameters travel behind an opaque handle created by one of the
//! `tanhmap_params_new_*` constructors and released with
//! `tanhmap_params_free`. Every function returns a status code; outputs are
//! written through caller-provided pointers and are only valid when the call
//! returns `TANHMAP_STATUS_OK`. Orbit buffers are allocated by the caller.
//!
//! The generated header lands in `include/tanhmap.h` at build time.

use std::os::raw::c_char;

use tanhmap::orbit::LYAPUNOV_DEFAULT_STEPS;
use tanhmap::{
    detect_period, lyapunov, sample_orbit, spread_of_sample, AttractorClass, GrowthRange,
    GrowthShape, MapParams, OrbitSpec, PeriodDetectorConfig,
};

/// Result of every API call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TanhmapStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A numeric argument violated its domain invariant.
    InvalidParameter = 2,
    /// The orbit tripped the divergence guard (|y| > 1e12).
    Divergence = 3,
}

/// Long-term orbit behavior, mirroring the library's classification.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TanhmapClass {
    FixedPoint = 0,
    Periodic = 1,
    Aperiodic = 2,
    Divergent = 3,
}

/// Opaque handle holding a validated parameter set.
pub struct TanhmapParams {
    inner: MapParams,
}

static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn tanhmap_version() -> *const c_char {
    VERSION.as_ptr() as *const c_char
}

fn new_params(shape: GrowthShape, gamma_min: f64, gamma_max: f64, c: f64) -> Option<MapParams> {
    let range = GrowthRange::new(gamma_min, gamma_max).ok()?;
    MapParams::new(shape, range, c).ok()
}

unsafe fn write_params(out: *mut *mut TanhmapParams, params: Option<MapParams>) -> TanhmapStatus {
    if out.is_null() {
        return TanhmapStatus::NullArgument;
    }
    match params {
        Some(inner) => {
            *out = Box::into_raw(Box::new(TanhmapParams { inner }));
            TanhmapStatus::Ok
        }
        None => {
            *out = std::ptr::null_mut();
            TanhmapStatus::InvalidParameter
        }
    }
}

/// Creates parameters with the linear growth shape `f(y) = 1 - y`.
///
/// # Safety
/// `out` must be a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn tanhmap_params_new_linear(
    gamma_min: f64,
    gamma_max: f64,
    c: f64,
    out: *mut *mut TanhmapParams,
) -> TanhmapStatus {
    write_params(out, new_params(GrowthShape::Linear, gamma_min, gamma_max, c))
}

/// Creates parameters with the tanh growth shape of steepness `a_y`.
///
/// # Safety
/// `out` must be a valid pointer to a handle slot.
#[no_mangle]
pub unsafe extern "C" fn tanhmap_params_new_tanh(
    a_y: f64,
    gamma_min: f64,
    gamma_max: f64,
    c: f64,
    out: *mut *mut TanhmapParams,
) -> TanhmapStatus {
    let params = match GrowthShape::tanh(a_y) {
        Ok(shape) => new_params(shape, gamma_min, gamma_max, c),
        Err(_) => None,
    };
    write_params(out, params)
}

/// Releases a handle. Null is accepted and ignored.
///
/// # Safety
/// `params` must be null or a handle obtained from a constructor, not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn tanhmap_params_free(params: *mut TanhmapParams) {
    if !params.is_null() {
        drop(Box::from_raw(params));
    }
}

unsafe fn eval(
    params: *const TanhmapParams,
    out: *mut f64,
    f: impl FnOnce(&MapParams) -> f64,
) -> TanhmapStatus {
    if params.is_null() || out.is_null() {
        return TanhmapStatus::NullArgument;
    }
    *out = f(&(*params).inner);
    TanhmapStatus::Ok
}

/// Growth rate `gamma(y)`.
///
/// # Safety
/// `params` must be a live handle; `out` must be valid for one f64.
#[no_mangle]
pub unsafe extern "C" fn tanhmap_growth_rate(
    params: *const TanhmapParams,
    y: f64,
    out: *mut f64,
) -> TanhmapStatus {
    eval(params, out, |p| p.growth_rate(y))
}

/// One map application `c * gamma(y) * y`.
///
/// # Safety
/// `params` must be a live handle; `out` must be valid for one f64.
#[no_mangle]
pub unsafe extern "C" fn tanhmap_step(
    params: *const TanhmapParams,
    y: f64,
    out: *mut f64,
) -> TanhmapStatus {
    eval(params, out, |p| p.step(y))
}

/// Analytic derivative of the map at `y`.
///
/// # Safety
/// `params` must be a live handle; `out` must be valid for one f64.
#[no_mangle]
pub unsafe extern "C" fn tanhmap_step_derivative(
    params: *const TanhmapParams,
    y: f64,
    out: *mut f64,
) -> TanhmapStatus {
    eval(params, out, |p| p.step_derivative(y))
}

fn valid_y0(y0: f64) -> bool {
    y0.is_finite() && y0 > 0.0 && y0 < 1.0
}

/// Iterates the map `n` times from `y0`, writing the full trace of `n + 1`
/// values (including `y0`) to `out`.
///
/// # Safety
/// `params` must be a live handle; `out` must be valid for `n + 1` f64s.
#[no_mangle]
pub unsafe extern "C" fn tanhmap_iterate(
    params: *const TanhmapParams,
    y0: f64,
    n: usize,
    out: *mut f64,
) -> TanhmapStatus {
    if params.is_null() || out.is_null() {
        return TanhmapStatus::NullArgument;
    }
    if !valid_y0(y0) {
        return TanhmapStatus::InvalidParameter;
    }
    match (*params).inner.iterate(y0, n) {
        Ok(trace) => {
            std::ptr::copy_nonoverlapping(trace.as_ptr(), out, trace.len());
            TanhmapStatus::Ok
        }
        Err(_) => TanhmapStatus::Divergence,
    }
}

/// Runs `transient` steps from `y0`, then writes the following `len`
/// post-transient values to `out`.
///
/// # Safety
/// `params` must be a live handle; `out` must be valid for `len` f64s.
#[no_mangle]
pub unsafe extern "C" fn tanhmap_sample_orbit(
    params: *const TanhmapParams,
    y0: f64,
    transient: usize,
    len: usize,
    out: *mut f64,
) -> TanhmapStatus {
    if params.is_null() || out.is_null() {
        return TanhmapStatus::NullArgument;
    }
    if !valid_y0(y0) || len == 0 {
        return TanhmapStatus::InvalidParameter;
    }
    let spec = OrbitSpec { y0, transient_len: transient, sample_len: len };
    match sample_orbit(&(*params).inner, &spec) {
        Ok(sample) => {
            std::ptr::copy_nonoverlapping(sample.values.as_ptr(), out, len);
            TanhmapStatus::Ok
        }
        Err(_) => TanhmapStatus::Divergence,
    }
}

/// Classifies the orbit's long-term behavior with the default detector
/// tolerances. `out_period` receives the minimal period for cycles (1 for a
/// fixed point) and 0 otherwise. A divergent orbit is a valid classification
/// here, not an error.
///
/// # Safety
/// `params` must be a live handle; `out_class` and `out_period` must each be
/// valid for one value.
#[no_mangle]
pub unsafe extern "C" fn tanhmap_classify(
    params: *const TanhmapParams,
    y0: f64,
    transient: usize,
    out_class: *mut TanhmapClass,
    out_period: *mut usize,
) -> TanhmapStatus {
    if params.is_null() || out_class.is_null() || out_period.is_null() {
        return TanhmapStatus::NullArgument;
    }
    if !valid_y0(y0) {
        return TanhmapStatus::InvalidParameter;
    }
    let spec = OrbitSpec { y0, transient_len: transient, sample_len: 50 };
    let class = detect_period(&(*params).inner, &spec, &PeriodDetectorConfig::default());
    *out_class = match class {
        AttractorClass::FixedPoint => TanhmapClass::FixedPoint,
        AttractorClass::Periodic { .. } => TanhmapClass::Periodic,
        AttractorClass::Aperiodic => TanhmapClass::Aperiodic,
        AttractorClass::Divergent => TanhmapClass::Divergent,
    };
    *out_period = class.period().unwrap_or(0);
    TanhmapStatus::Ok
}

/// Lyapunov exponent averaged over `n` post-transient steps. Superstable
/// orbits yield negative infinity.
///
/// # Safety
/// `params` must be a live handle; `out` must be valid for one f64.
#[no_mangle]
pub unsafe extern "C" fn tanhmap_lyapunov(
    params: *const TanhmapParams,
    y0: f64,
    transient: usize,
    n: usize,
    out: *mut f64,
) -> TanhmapStatus {
    if params.is_null() || out.is_null() {
        return TanhmapStatus::NullArgument;
    }
    if !valid_y0(y0) || n == 0 {
        return TanhmapStatus::InvalidParameter;
    }
    match lyapunov(&(*params).inner, y0, transient, n) {
        Ok(l) => {
            *out = l;
            TanhmapStatus::Ok
        }
        Err(_) => TanhmapStatus::Divergence,
    }
}

/// Default Lyapunov step count used by the library's sweeps.
#[no_mangle]
pub extern "C" fn tanhmap_lyapunov_default_steps() -> usize {
    LYAPUNOV_DEFAULT_STEPS
}

/// Occupied-pixel count of `samples` post-transient values on the 100-pixel
/// partition of [0, 1].
///
/// # Safety
/// `params` must be a live handle; `out` must be valid for one u32.
#[no_mangle]
pub unsafe extern "C" fn tanhmap_spread_occupied(
    params: *const TanhmapParams,
    y0: f64,
    transient: usize,
    samples: usize,
    out: *mut u32,
) -> TanhmapStatus {
    if params.is_null() || out.is_null() {
        return TanhmapStatus::NullArgument;
    }
    if !valid_y0(y0) || samples == 0 {
        return TanhmapStatus::InvalidParameter;
    }
    let spec = OrbitSpec { y0, transient_len: transient, sample_len: samples };
    match sample_orbit(&(*params).inner, &spec) {
        Ok(sample) => {
            *out = spread_of_sample(&sample).occupied() as u32;
            TanhmapStatus::Ok
        }
        Err(_) => TanhmapStatus::Divergence,
    }
}
