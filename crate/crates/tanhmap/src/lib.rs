//! Logistic map with a nonlinear growth rate.
//!
//! The classic logistic map weights its bifurcation constant by a growth
//! rate that decays linearly in the state. This crate generalizes the decay
//! to a hyperbolic-tangent relaxation between configurable bounds
//! `[gamma_min, gamma_max]`, which reorders the bifurcation structure:
//! onsets shift, chaotic bands shrink into islands, and small-period regimes
//! replace wide chaotic regions as `gamma_min` grows.
//!
//! The crate provides:
//!
//! - [`map`]: the recurrence, growth shapes, analytic derivatives, and raw
//!   orbit iteration;
//! - [`orbit`]: the transient/sampling protocol, attractor classification,
//!   and Lyapunov exponents;
//! - [`bifurcation`]: sweeps over the bifurcation constant, onset finders,
//!   and the max-value envelope check;
//! - [`spread`]: the pixel-occupancy spread metric over [0, 1] and its 2D
//!   `(gamma_min, C)` sweep;
//! - [`emit`]: deterministic CSV and PGM serialization;
//! - [`cli`]: the `tanhmap` command-line front end.
//!
//! Everything is deterministic: identical inputs produce bit-identical
//! results regardless of thread count.

pub mod bifurcation;
pub mod cli;
pub mod emit;
pub mod map;
pub mod orbit;
pub mod spread;

pub use bifurcation::{
    classify_sweep, envelope_check, find_onsets, sweep_c, CSweepSpec, ClassifiedPoint,
    DiagramDataset, DiagramRow, EnvelopePoint, OnsetReport,
};
pub use map::{Divergence, GrowthRange, GrowthShape, MapParams, ParamError, DIVERGENCE_GUARD};
pub use orbit::{
    detect_period, lyapunov, orbit_extremes, sample_orbit, AttractorClass, OrbitSample, OrbitSpec,
    PeriodDetectorConfig,
};
pub use spread::{
    bin_index, spread_of_sample, spread_sweep, uniform_axis, SpreadCell, SpreadGrid,
    SpreadMapResult, SPREAD_BINS,
};
