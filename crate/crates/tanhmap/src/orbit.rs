//! Transient protocol, attractor classification, and Lyapunov exponents.
//!
//! The sampling protocol iterates the map `transient_len` times to
//! eliminate transients, then records the following `sample_len` values. Period detection decouples from the plotting sample:
//! it keeps iterating past the transient until a candidate period stabilizes
//! or a fixed step budget runs out.

use crate::map::{Divergence, MapParams, ParamError, DIVERGENCE_GUARD};

/// Hard cap on post-transient steps spent hunting for a period before the
/// orbit is declared aperiodic. Sized so that even the parabolic slowdown at
/// c = 1 (algebraic ~1/n convergence) resolves to FixedPoint within budget.
const MAX_DETECT_STEPS: usize = 1 << 18;

/// Iteration protocol: initial value, transient length, and sample length.
///
/// Defaults: 1000 transient steps, then 50 samples.
/// The initial value defaults to 0.5; orbits of these unimodal-like maps
/// seeded near the critical point settle on the attracting cycle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrbitSpec {
    pub y0: f64,
    pub transient_len: usize,
    pub sample_len: usize,
}

impl Default for OrbitSpec {
    fn default() -> Self {
        OrbitSpec { y0: 0.5, transient_len: 1000, sample_len: 50 }
    }
}

impl OrbitSpec {
    pub fn validate(&self) -> Result<(), ParamError> {
        if !(self.y0.is_finite() && self.y0 > 0.0 && self.y0 < 1.0) {
            return Err(ParamError::InvalidY0 { y0: self.y0 });
        }
        if self.sample_len == 0 {
            return Err(ParamError::EmptySample);
        }
        Ok(())
    }
}

/// Post-transient sample of orbit values, together with the parameters and
/// protocol that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitSample {
    pub values: Vec<f64>,
    pub params: MapParams,
    pub spec: OrbitSpec,
}

/// Tolerances for the period detector.
///
/// A candidate period `p` passes when `|Y_{n+p} - Y_n| <= eps_abs +
/// eps_rel * |Y_n|` holds for `confirm_cycles * p` consecutive `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodDetectorConfig {
    pub eps_abs: f64,
    pub eps_rel: f64,
    pub p_max: usize,
    pub confirm_cycles: usize,
}

impl Default for PeriodDetectorConfig {
    fn default() -> Self {
        PeriodDetectorConfig { eps_abs: 1e-9, eps_rel: 1e-9, p_max: 64, confirm_cycles: 3 }
    }
}

impl PeriodDetectorConfig {
    pub fn validate(&self) -> Result<(), ParamError> {
        if !(self.eps_abs > 0.0 && self.eps_rel > 0.0) {
            return Err(ParamError::InvalidDetectorConfig { reason: "tolerances must be > 0" });
        }
        if self.p_max == 0 {
            return Err(ParamError::InvalidDetectorConfig { reason: "p_max must be >= 1" });
        }
        if self.confirm_cycles == 0 {
            return Err(ParamError::InvalidDetectorConfig { reason: "confirm_cycles must be >= 1" });
        }
        Ok(())
    }

    /// Values needed to test every p up to `p_max`.
    fn window_len(&self) -> usize {
        self.confirm_cycles.saturating_add(1).saturating_mul(self.p_max)
    }
}

/// Long-term behavior of an orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttractorClass {
    FixedPoint,
    /// Minimal period, always >= 2.
    Periodic { p: usize },
    Aperiodic,
    Divergent,
}

impl AttractorClass {
    /// Cycle length for settled orbits: 1 for a fixed point, `p` for a
    /// periodic orbit, `None` otherwise.
    pub fn period(&self) -> Option<usize> {
        match *self {
            AttractorClass::FixedPoint => Some(1),
            AttractorClass::Periodic { p } => Some(p),
            _ => None,
        }
    }
}

/// Runs the transient and returns the following `sample_len` orbit values,
/// starting with the state reached by the final transient step. With
/// `transient_len = 0` the sample therefore begins at `y0` itself, matching
/// `MapParams::iterate`.
pub fn sample_orbit(params: &MapParams, spec: &OrbitSpec) -> Result<OrbitSample, Divergence> {
    debug_assert!(spec.validate().is_ok());
    let mut y = spec.y0;
    for k in 1..=spec.transient_len {
        y = params.step(y);
        if y.abs() > DIVERGENCE_GUARD {
            return Err(Divergence { step: k });
        }
    }
    let mut values = Vec::with_capacity(spec.sample_len);
    values.push(y);
    for k in 1..spec.sample_len {
        y = params.step(y);
        if y.abs() > DIVERGENCE_GUARD {
            return Err(Divergence { step: spec.transient_len + k });
        }
        values.push(y);
    }
    Ok(OrbitSample { values, params: *params, spec: *spec })
}

/// Smallest p in `[1, p_max]` whose tolerance test passes on the tail of the
/// chronological window, or None. Scanning upward from p = 1 guarantees the
/// returned period is minimal: no proper divisor can also pass.
fn smallest_period(window: &[f64], cfg: &PeriodDetectorConfig) -> Option<usize> {
    let len = window.len();
    for p in 1..=cfg.p_max {
        let need = cfg.confirm_cycles * p;
        if need + p > len {
            break;
        }
        let pass = (len - p - need..len - p).all(|n| {
            let tol = cfg.eps_abs + cfg.eps_rel * window[n].abs();
            (window[n + p] - window[n]).abs() <= tol
        });
        if pass {
            return Some(p);
        }
    }
    None
}

/// Classifies the asymptotic behavior of the orbit.
///
/// After the transient, the orbit is extended in geometrically spaced
/// checkpoints (window, 2x window, 4x window, ...). At each checkpoint the
/// smallest passing period over the latest window is computed; a result is
/// accepted once three consecutive checkpoints agree. The triple confirmation
/// rejects transient aliases: an orbit still converging toward a fixed point
/// through a near-neutral oscillation can momentarily pass the p = 2 test
/// before p = 1 does, but never across three doublings of the window.
pub fn detect_period(
    params: &MapParams,
    spec: &OrbitSpec,
    cfg: &PeriodDetectorConfig,
) -> AttractorClass {
    debug_assert!(spec.validate().is_ok() && cfg.validate().is_ok());
    let mut y = spec.y0;
    for _ in 0..spec.transient_len {
        y = params.step(y);
        if y.abs() > DIVERGENCE_GUARD {
            return AttractorClass::Divergent;
        }
    }

    let window = cfg.window_len();
    let mut ring = vec![0.0f64; window];
    ring[0] = y;
    let mut produced = 1usize; // the post-transient state is the first entry
    let mut next_checkpoint = window;
    let mut last: Option<usize> = None;
    let mut second_last: Option<usize> = None;
    let budget = MAX_DETECT_STEPS.max(window.saturating_mul(4));

    while produced < budget {
        y = params.step(y);
        if y.abs() > DIVERGENCE_GUARD {
            return AttractorClass::Divergent;
        }
        ring[produced % window] = y;
        produced += 1;
        if produced == next_checkpoint {
            let start = produced % window;
            let chron: Vec<f64> = (0..window).map(|i| ring[(start + i) % window]).collect();
            let cur = smallest_period(&chron, cfg);
            if let Some(p) = cur {
                if last == Some(p) && second_last == Some(p) {
                    return match p {
                        1 => AttractorClass::FixedPoint,
                        p => AttractorClass::Periodic { p },
                    };
                }
            }
            second_last = last;
            last = cur;
            next_checkpoint *= 2;
        }
    }
    AttractorClass::Aperiodic
}

/// Average log-derivative along the orbit over `n` post-transient steps.
///
/// Returns `f64::NEG_INFINITY` when the derivative vanishes exactly at some
/// step (superstable orbit), rather than propagating a NaN through the sum.
pub fn lyapunov(
    params: &MapParams,
    y0: f64,
    transient: usize,
    n: usize,
) -> Result<f64, Divergence> {
    debug_assert!(n >= 1);
    let mut y = y0;
    for k in 1..=transient {
        y = params.step(y);
        if y.abs() > DIVERGENCE_GUARD {
            return Err(Divergence { step: k });
        }
    }
    let mut acc = 0.0;
    for k in 0..n {
        let d = params.step_derivative(y);
        if d == 0.0 {
            return Ok(f64::NEG_INFINITY);
        }
        acc += d.abs().ln();
        y = params.step(y);
        if y.abs() > DIVERGENCE_GUARD {
            return Err(Divergence { step: transient + k + 1 });
        }
    }
    Ok(acc / n as f64)
}

/// Default iteration count for Lyapunov estimates.
pub const LYAPUNOV_DEFAULT_STEPS: usize = 100_000;

/// Exact minimum and maximum of the sampled values.
pub fn orbit_extremes(sample: &OrbitSample) -> (f64, f64) {
    assert!(!sample.values.is_empty(), "orbit sample must be nonempty");
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for &v in &sample.values {
        min = min.min(v);
        max = max.max(v);
    }
    (min, max)
}
