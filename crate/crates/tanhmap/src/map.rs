//! The recurrence relation and its growth-rate functions.
//!
//! The classic logistic map `Y' = C * (1 - Y) * Y` weights the bifurcation
//! constant `C` by a growth rate that decays linearly in `Y`. Here the growth
//! rate is generalized to
//!
//! ```text
//! gamma(Y) = gamma_min + f(Y) * (gamma_max - gamma_min)
//! Y'       = C * gamma(Y) * Y
//! ```
//!
//! where the shape `f` is either the linear `1 - Y` or the sigmoid
//! `0.5 * (1 - tanh(a_y * (Y - 0.5)))`. All operations are pure functions of
//! their inputs and safe to call concurrently.

use thiserror::Error;

/// Orbits are declared divergent once `|y|` exceeds this bound.
pub const DIVERGENCE_GUARD: f64 = 1e12;

/// Invalid parameter values, reported at construction time.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParamError {
    #[error("tanh steepness a_y must be finite and > 0, got {a_y}")]
    InvalidSteepness { a_y: f64 },
    #[error("growth range must satisfy 0 <= gamma_min < gamma_max <= 1, got [{gamma_min}, {gamma_max}]")]
    InvalidGammaRange { gamma_min: f64, gamma_max: f64 },
    #[error("bifurcation constant c must be finite and > 0, got {c}")]
    InvalidC { c: f64 },
    #[error("initial value y0 must lie strictly inside (0, 1), got {y0}")]
    InvalidY0 { y0: f64 },
    #[error("sample length must be >= 1")]
    EmptySample,
    #[error("period detector config invalid: {reason}")]
    InvalidDetectorConfig { reason: &'static str },
    #[error("c sweep must satisfy 0 < c_min < c_max with c_steps >= 2, got [{c_min}, {c_max}] x {c_steps}")]
    InvalidCSweep { c_min: f64, c_max: f64, c_steps: usize },
    #[error("spread axis invalid: {reason}")]
    InvalidAxis { reason: &'static str },
}

/// Signals that the divergence guard tripped. Carries the index of the step
/// (counted from the initial value) that produced the out-of-range state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("orbit diverged at step {step} (|y| > 1e12)")]
pub struct Divergence {
    pub step: usize,
}

/// Normalized shape of the growth-rate decay, `f(Y)`.
///
/// `Linear` is the classic `1 - Y`. `Tanh` relaxes between its extremes like
/// a system approaching equilibrium: slow near `Y = 0` and `Y = 1`, fastest
/// at `Y = 0.5`, with `a_y` controlling the maximum steepness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GrowthShape {
    Linear,
    Tanh { a_y: f64 },
}

impl GrowthShape {
    /// Validated tanh shape; `a_y` must be finite and strictly positive.
    pub fn tanh(a_y: f64) -> Result<Self, ParamError> {
        let shape = GrowthShape::Tanh { a_y };
        shape.validate()?;
        Ok(shape)
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        match *self {
            GrowthShape::Linear => Ok(()),
            GrowthShape::Tanh { a_y } => {
                if a_y.is_finite() && a_y > 0.0 {
                    Ok(())
                } else {
                    Err(ParamError::InvalidSteepness { a_y })
                }
            }
        }
    }

    /// Shape value `f(y)`.
    ///
    /// Tanh: `0.5 * (1 - tanh(a_y * (y - 0.5)))`, strictly inside (0, 1) for
    /// finite `y`. Note `f(0)` is close to but not exactly 1 (0.9933 at
    /// `a_y = 5`); the formula is implemented verbatim, without endpoint
    /// renormalization. Linear: `1 - y`, which leaves (0, 1) when `y` does.
    pub fn value(&self, y: f64) -> f64 {
        match *self {
            GrowthShape::Linear => 1.0 - y,
            GrowthShape::Tanh { a_y } => 0.5 * (1.0 - (a_y * (y - 0.5)).tanh()),
        }
    }

    /// Analytic slope `df/dy`.
    pub fn slope(&self, y: f64) -> f64 {
        match *self {
            GrowthShape::Linear => -1.0,
            GrowthShape::Tanh { a_y } => {
                // d tanh(u)/dy = a_y * sech^2(u) = a_y * (1 - tanh^2(u))
                let t = (a_y * (y - 0.5)).tanh();
                -0.5 * a_y * (1.0 - t * t)
            }
        }
    }
}

/// Bounds of the growth rate: `0 <= gamma_min < gamma_max <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthRange {
    gamma_min: f64,
    gamma_max: f64,
}

impl GrowthRange {
    pub fn new(gamma_min: f64, gamma_max: f64) -> Result<Self, ParamError> {
        let ok = gamma_min.is_finite()
            && gamma_max.is_finite()
            && 0.0 <= gamma_min
            && gamma_min < gamma_max
            && gamma_max <= 1.0;
        if ok {
            Ok(GrowthRange { gamma_min, gamma_max })
        } else {
            Err(ParamError::InvalidGammaRange { gamma_min, gamma_max })
        }
    }

    /// The full range (0, 1), under which the linear shape reproduces the
    /// classic logistic map.
    pub fn unit() -> Self {
        GrowthRange { gamma_min: 0.0, gamma_max: 1.0 }
    }

    pub fn gamma_min(&self) -> f64 {
        self.gamma_min
    }

    pub fn gamma_max(&self) -> f64 {
        self.gamma_max
    }

    /// Growth rate `gamma(y) = gamma_min + f(y) * (gamma_max - gamma_min)`.
    pub fn rate(&self, shape: &GrowthShape, y: f64) -> f64 {
        self.gamma_min + shape.value(y) * (self.gamma_max - self.gamma_min)
    }

    /// Analytic `d gamma / dy`.
    fn rate_slope(&self, shape: &GrowthShape, y: f64) -> f64 {
        shape.slope(y) * (self.gamma_max - self.gamma_min)
    }
}

/// Full parameter set of the recurrence `Y' = C * gamma(Y) * Y`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapParams {
    shape: GrowthShape,
    range: GrowthRange,
    c: f64,
}

impl MapParams {
    pub fn new(shape: GrowthShape, range: GrowthRange, c: f64) -> Result<Self, ParamError> {
        shape.validate()?;
        if !(c.is_finite() && c > 0.0) {
            return Err(ParamError::InvalidC { c });
        }
        Ok(MapParams { shape, range, c })
    }

    /// Same shape and range with a different bifurcation constant.
    pub fn with_c(&self, c: f64) -> Result<Self, ParamError> {
        MapParams::new(self.shape, self.range, c)
    }

    pub fn shape(&self) -> &GrowthShape {
        &self.shape
    }

    pub fn range(&self) -> &GrowthRange {
        &self.range
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// `gamma(y)` for these parameters.
    pub fn growth_rate(&self, y: f64) -> f64 {
        self.range.rate(&self.shape, y)
    }

    /// One application of the map. The factor order `(c * gamma) * y` is
    /// fixed so serial and parallel runs produce bit-identical values.
    pub fn step(&self, y: f64) -> f64 {
        (self.c * self.growth_rate(y)) * y
    }

    /// Analytic `dF/dy` where `F(y) = c * gamma(y) * y`:
    /// `F'(y) = c * (gamma(y) + y * gamma'(y))`.
    pub fn step_derivative(&self, y: f64) -> f64 {
        self.c * (self.growth_rate(y) + y * self.range.rate_slope(&self.shape, y))
    }

    /// Iterates the map `n` times from `y0` (which must lie in (0, 1)),
    /// returning the full trace of `n + 1` values including `y0`.
    ///
    /// Aborts with [`Divergence`] if `|y|` exceeds [`DIVERGENCE_GUARD`]; the
    /// error carries the index of the offending step.
    pub fn iterate(&self, y0: f64, n: usize) -> Result<Vec<f64>, Divergence> {
        let mut trace = Vec::with_capacity(n + 1);
        trace.push(y0);
        let mut y = y0;
        for k in 1..=n {
            y = self.step(y);
            if y.abs() > DIVERGENCE_GUARD {
                return Err(Divergence { step: k });
            }
            trace.push(y);
        }
        Ok(trace)
    }
}
